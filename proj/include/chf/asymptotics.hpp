#pragma once

#include <complex>
#include <string>
#include <vector>

#include "chf/classifier.hpp"
#include "chf/config.hpp"
#include "chf/exact_param.hpp"

namespace chf {

/// Which limiting law a LimitForm encodes.
enum class LimitRule {
  UPolynomialA,        // a = -m: U -> (-1)^m (b)_m
  UPolynomialShifted,  // a = b - 1 - q: U -> (-1)^q (2-b)_q z^{1-b}
  UBAbove2,            // b >= 2, b != 2
  UBEquals2,
  UBBetween1And2,      // 1 < b < 2
  UBEquals1,           // digamma and 2 gamma_E
  UBBetween0And1,
  UBEquals0,
  UBNegative,          // b < 0
  UInfinity,           // U ~ z^{-a}
  MExponential,        // M ~ Gamma(b)/Gamma(a) e^z z^{a-b}
  MPolynomial,         // a = -m: top coefficient of the polynomial
  MOrigin,             // M -> 1
};

const char* to_string(LimitRule r);

/// Leading behaviour
///   leading_coeff * [e^z] * z^exponent * [ln z] + constant_term
/// with a remainder of order z^correction_order (times ln z when
/// correction_log, times e^z when exponential).
struct LimitForm {
  LimitRule rule = LimitRule::MOrigin;
  double leading_coeff = 1.0;
  double exponent = 0.0;
  bool log_flag = false;        // the b = 1 and b = 2 laws for U
  double correction_order = 1.0;
  bool log_in_leading = false;  // leading term multiplies ln z
  bool correction_log = false;
  bool exponential = false;
  double constant_term = 0.0;   // second explicit term (1 < b < 2, b = 1)

  /// The explicit terms at z.
  double value(double z) const;
};

/// M(a, b, z) as z -> +infinity. Throws UndefinedFunction for b in Z<=0.
LimitForm m_large_z(const ExactParam& a, const ExactParam& b);

/// U(a, b, z) as z -> 0+. Total over tagged (a, b).
LimitForm u_small_z(const ExactParam& a, const ExactParam& b);

/// U(a, b, z) as z -> +infinity.
LimitForm u_large_z(const ExactParam& a, const ExactParam& b);

/// M(a, b, z) as z -> 0.
LimitForm m_small_z(const ExactParam& a, const ExactParam& b);

enum class SectorPath { Upper, Lower };  // sign in e^{+- i pi a}

/// Both terms of the general large-|z| law for M:
///   Gamma(b)/Gamma(a) e^z z^{a-b} + Gamma(b)/Gamma(b-a) e^{+- i pi a} z^{-a}.
struct TwoTermForm {
  double exponential_coeff = 0.0;  // Gamma(b)/Gamma(a)
  double exponential_exponent = 0.0;
  std::complex<double> algebraic_coeff;  // Gamma(b)/Gamma(b-a) e^{+- i pi a}
  double algebraic_exponent = 0.0;
  SectorPath path = SectorPath::Upper;
  double sector_lo = 0.0;  // admissible arg z (radians) for this path
  double sector_hi = 0.0;

  /// Both terms at real z > 0; the imaginary part of the subdominant term is dropped.
  double value_real(double z) const;
};

/// Throws DomainError when a in Z<=0 and b - a in Z<=0, UndefinedFunction
/// for b in Z<=0.
TwoTermForm m_large_z_full(const ExactParam& a, const ExactParam& b, SectorPath path);

struct LimitCheckReport {
  LimitForm form;
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<double> rel_deviation;  // |f - form| / |form| per grid point
  double fitted_exponent = 0.0;       // local slope at the grid end nearest the limit
  double fitted_coeff = 0.0;          // extrapolated to the limit
  double exponent_error = 0.0;        // |fitted - analytic|
  double coeff_rel_error = 0.0;
};

/// Compares a solution with its limiting law on `grid` (ascending). Grids
/// below 1 use the z -> 0 law, grids above 1 the z -> infinity law.
/// Supported kinds: KummerM and TricomiU. Throws std::invalid_argument for
/// unsorted or mixed grids and unsupported kinds.
LimitCheckReport limit_check(SolutionKind fn, const ExactParam& a, const ExactParam& b, const std::vector<double>& grid,
                             const EvalConfig& cfg = {});

}  // namespace chf
