#pragma once

#include <mpfr.h>

#include <boost/multiprecision/mpfr.hpp>

#include "chf/detail/real_ops.hpp"

namespace chf::detail {

/// Software floating point with runtime-selectable precision (MPFR).
using Extended = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

/// Sets the working precision (decimal digits) of Extended for the calling
/// thread and restores it on scope exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(Extended::default_precision()) {
    Extended::default_precision(digits);
  }
  ~PrecisionScope() { Extended::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

template <>
struct RealOps<Extended> {
  static Extended eps() {
    return boost::multiprecision::pow(Extended(2), -static_cast<long>(mpfr_get_default_prec()) + 1);
  }
  static Extended pi() {
    Extended r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
  }
  static Extended euler() {
    Extended r;
    mpfr_const_euler(r.backend().data(), MPFR_RNDN);
    return r;
  }
  static Extended abs(const Extended& x) { return boost::multiprecision::abs(x); }
  static Extended log(const Extended& x) { return boost::multiprecision::log(x); }
  static Extended exp(const Extended& x) { return boost::multiprecision::exp(x); }
  static Extended pow(const Extended& x, const Extended& p) { return boost::multiprecision::pow(x, p); }
  static Extended sin_pi(const Extended& x) {
    Extended r;
    mpfr_sinpi_compat(r, x);
    return r;
  }
  static bool is_nonpositive_integer(const Extended& x) {
    return x <= 0 && mpfr_integer_p(x.backend().data()) != 0;
  }
  static Extended gamma(const Extended& x) {
    Extended r;
    mpfr_gamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
  }
  static Extended rgamma(const Extended& x) {
    if (is_nonpositive_integer(x)) return Extended(0);
    return Extended(1) / gamma(x);
  }
  static Extended digamma(const Extended& x) {
    Extended r;
    mpfr_digamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
  }
  static double to_double(const Extended& x) { return x.convert_to<double>(); }
  static Extended from_double(double x) { return Extended(x); }
  static bool finite(const Extended& x) { return mpfr_number_p(x.backend().data()) != 0; }

 private:
  static void mpfr_sinpi_compat(Extended& r, const Extended& x) {
    // sin(pi x) with exact reduction of x modulo 2
    Extended red = x - 2 * boost::multiprecision::round(x / 2);
    r = boost::multiprecision::sin(pi() * red);
  }
};

}  // namespace chf::detail
