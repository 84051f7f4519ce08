#include "chf/gamma.hpp"

#include <cmath>
#include <iterator>
#include <numbers>

#include "chf/errors.hpp"

namespace chf {

namespace {

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// pi * cot(pi x), argument reduced to [-1/2, 1/2] first.
double pi_cot_pi(double x) {
  const double r = x - std::nearbyint(x);
  return std::numbers::pi / std::tan(std::numbers::pi * r);
}

constexpr double kGammaOverflow = 171.0;

// Positive root of psi as a double-double, and Taylor coefficients
// psi^(k)(x0)/k! about it, k = 1..21.
constexpr double kPsiRootHi = 1.4616321449683622;
constexpr double kPsiRootLo = 9.549995429965697e-17;
constexpr double kPsiRootTaylor[] = {
    0.9676722454476212,     -0.4427631689835921,    0.258499760955651,      -0.16394270544240652,
    0.10782405069126237,    -0.07219956125645471,   0.04880428816414311,    -0.03316112647484736,
    0.022597648232218104,   -0.01542476590494896,   0.010538791616612175,   -0.007204534386356869,
    0.004926781395729853,   -0.003369801655439328,  0.002305126326734928,   -0.0015769367714301972,
    0.0010788252019162967,  -0.0007380709389960052, 0.000504953265834602,   -0.0003454680251063077,
    0.00023635601564027053,
};

}  // namespace

GammaValue gamma(const ExactParam& x) {
  if (x.is_nonpositive_integer()) return {true, 0.0, 0.0};
  const double v = x.value();
  return {false, std::tgamma(v), rgamma(v)};
}

double gamma_value(double x) {
  if (nonpositive_integer(x)) throw PoleError("gamma: pole at non-positive integer");
  return std::tgamma(x);
}

double rgamma(double x) {
  if (nonpositive_integer(x)) return 0.0;
  if (x > kGammaOverflow) return std::exp(-std::lgamma(x));
  if (x < -kGammaOverflow) {
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    const double r = x - std::nearbyint(x);
    const double s = std::sin(std::numbers::pi * r) * ((static_cast<long long>(std::nearbyint(x)) % 2 == 0) ? 1.0 : -1.0);
    return s * std::exp(std::lgamma(1.0 - x)) / std::numbers::pi;
  }
  return 1.0 / std::tgamma(x);
}

double digamma(double x) {
  if (nonpositive_integer(x)) throw PoleError("digamma: pole at non-positive integer");
  if (x < 0.0) return digamma(1.0 - x) - pi_cot_pi(x);
  if (std::fabs(x - kPsiRootHi) < 0.2) {
    const double d = (x - kPsiRootHi) - kPsiRootLo;
    double acc = 0.0;
    for (int k = std::size(kPsiRootTaylor) - 1; k >= 0; --k) acc = acc * d + kPsiRootTaylor[k];
    return acc * d;
  }

  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum_k B_{2k} / (2k x^{2k})
  const double w = 1.0 / (x * x);
  const double tail =
      w * (1.0 / 12 -
           w * (1.0 / 120 -
                w * (1.0 / 252 - w * (1.0 / 240 - w * (1.0 / 132 - w * (691.0 / 32760 - w * (1.0 / 12)))))));
  return shift + std::log(x) - 0.5 / x - tail;
}

double pochhammer(const ExactParam& a, std::int64_t s) {
  if (s < 0) throw DomainError("pochhammer: negative index");
  if (s == 0) return 1.0;
  if (a.is_nonpositive_integer()) {
    const std::int64_t m = -*a.integer_tag();
    if (s >= m + 1) return 0.0;
  }
  const double av = a.value();
  if (s <= 64) {
    double p = 1.0;
    for (std::int64_t k = 0; k < s; ++k) p *= av + static_cast<double>(k);
    return p;
  }
  if (a.is_nonpositive_integer()) {
    // a+s <= 0: (-m)_s = (-1)^s m! / (m-s)!
    const double m = -av;
    const double mag = std::exp(std::lgamma(m + 1.0) - std::lgamma(m - static_cast<double>(s) + 1.0));
    return (s % 2 == 0) ? mag : -mag;
  }
  int sign_hi = 1;
  int sign_lo = 1;
  const double hi = ::lgamma_r(av + static_cast<double>(s), &sign_hi);
  const double lo = ::lgamma_r(av, &sign_lo);
  return static_cast<double>(sign_hi * sign_lo) * std::exp(hi - lo);
}

double pochhammer(double a, std::int64_t s) { return pochhammer(ExactParam(a), s); }

double factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  if (n > 170) return HUGE_VAL;
  double f = 1.0;
  for (std::int64_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

double binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::int64_t i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}

}  // namespace chf
