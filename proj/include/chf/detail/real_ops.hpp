#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "chf/gamma.hpp"

namespace chf::detail {

/// Elementary and gamma-family operations per real type. Specialized for
/// double here and for the extended type in extended.hpp.
template <class T>
struct RealOps;

template <>
struct RealOps<double> {
  static double eps() { return std::numeric_limits<double>::epsilon(); }
  static double pi() { return std::numbers::pi; }
  static double euler() { return kEulerGamma; }
  static double abs(double x) { return std::fabs(x); }
  static double log(double x) { return std::log(x); }
  static double exp(double x) { return std::exp(x); }
  static double pow(double x, double p) { return std::pow(x, p); }
  static double sin_pi(double x) { return std::sin(std::numbers::pi * (x - 2.0 * std::nearbyint(0.5 * x))); }
  static double gamma(double x) { return gamma_value(x); }
  static double rgamma(double x) { return chf::rgamma(x); }
  static double digamma(double x) { return chf::digamma(x); }
  static double to_double(double x) { return x; }
  static double from_double(double x) { return x; }
  static bool finite(double x) { return std::isfinite(x); }
};

}  // namespace chf::detail
