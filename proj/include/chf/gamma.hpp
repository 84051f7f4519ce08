#pragma once

#include <cstdint>

#include "chf/exact_param.hpp"

namespace chf {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Gamma at a tagged argument. Poles are values, not errors: arguments in
/// Z<=0 yield `pole == true` with a zero reciprocal.
struct GammaValue {
  bool pole = false;
  double value = 0.0;       // meaningless at a pole
  double reciprocal = 0.0;  // 1/Gamma, entire; 0 at a pole

  bool is_pole() const noexcept { return pole; }
};

GammaValue gamma(const ExactParam& x);

/// 1/Gamma(x). Exact zero for x in Z<=0.
double rgamma(double x);

/// Gamma(x) for x not in Z<=0; throws PoleError otherwise.
double gamma_value(double x);

/// psi(x) = Gamma'(x)/Gamma(x). Throws PoleError for x in Z<=0.
double digamma(double x);

/// Rising factorial (a)_s = a (a+1) ... (a+s-1), (a)_0 = 1.
///
/// Zero exactly when a = -m in Z<=0 and s >= m+1. For a in Z<=0 with
/// a+s <= 0 the finite product is returned (no indeterminacy).
/// Throws DomainError for s < 0.
double pochhammer(const ExactParam& a, std::int64_t s);

/// Untagged overload: integer-ness of `a` taken from the exact value.
double pochhammer(double a, std::int64_t s);

/// n! as a double (exact up to 22!).
double factorial(std::int64_t n);

/// Binomial coefficient C(n, k) as a double.
double binomial(std::int64_t n, std::int64_t k);

}  // namespace chf
