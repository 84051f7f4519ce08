#include "chf/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chf/errors.hpp"
#include "chf/gamma.hpp"
#include "chf/kummer.hpp"
#include "chf/tricomi.hpp"

namespace chf {

namespace {

double gamma_ratio(double num, double den) {
  // Gamma(num) / Gamma(den); num is never a pole where this is used
  return gamma_value(num) * rgamma(den);
}

// Normal equations solved by Gaussian elimination with partial pivoting.
std::vector<double> least_squares(const std::vector<std::vector<double>>& rows, const std::vector<double>& y) {
  const std::size_t k = rows.front().size();
  std::vector<std::vector<double>> A(k, std::vector<double>(k + 1, 0.0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) A[r][c] += rows[i][r] * rows[i][c];
      A[r][k] += rows[i][r] * y[i];
    }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r)
      if (std::fabs(A[r][c]) > std::fabs(A[piv][c])) piv = r;
    std::swap(A[c], A[piv]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c) continue;
      const double f = A[r][c] / A[c][c];
      for (std::size_t j = c; j <= k; ++j) A[r][j] -= f * A[c][j];
    }
  }
  std::vector<double> x(k);
  for (std::size_t r = 0; r < k; ++r) x[r] = A[r][k] / A[r][r];
  return x;
}

LimitForm form(LimitRule rule, double coeff, double exponent, double correction) {
  LimitForm f;
  f.rule = rule;
  f.leading_coeff = coeff;
  f.exponent = exponent;
  f.correction_order = correction;
  return f;
}

// U(-m, b, z) = (-1)^m sum_s C(m,s) (b+s)_{m-s} (-z)^s: its lowest nonzero term.
LimitForm polynomial_u_limit(std::int64_t m, const ExactParam& b) {
  for (std::int64_t s = 0; s <= m; ++s) {
    const double c = ((m + s) % 2 == 0 ? 1.0 : -1.0) * binomial(m, s) * pochhammer(b.shifted(s), m - s);
    if (c != 0.0) return form(LimitRule::UPolynomialA, c, static_cast<double>(s), static_cast<double>(s + 1));
  }
  // (-1)^m z^m never vanishes
  return form(LimitRule::UPolynomialA, (m % 2 == 0 ? 1.0 : -1.0), static_cast<double>(m), static_cast<double>(m + 1));
}

void require_m_defined(const ExactParam& b) {
  if (b.is_nonpositive_integer())
    throw UndefinedFunction("M(a,b,z) is not defined for b a non-positive integer (b = " + b.to_string() + ")");
}

}  // namespace

const char* to_string(LimitRule r) {
  switch (r) {
    case LimitRule::UPolynomialA:
      return "UPolynomialA";
    case LimitRule::UPolynomialShifted:
      return "UPolynomialShifted";
    case LimitRule::UBAbove2:
      return "UBAbove2";
    case LimitRule::UBEquals2:
      return "UBEquals2";
    case LimitRule::UBBetween1And2:
      return "UBBetween1And2";
    case LimitRule::UBEquals1:
      return "UBEquals1";
    case LimitRule::UBBetween0And1:
      return "UBBetween0And1";
    case LimitRule::UBEquals0:
      return "UBEquals0";
    case LimitRule::UBNegative:
      return "UBNegative";
    case LimitRule::UInfinity:
      return "UInfinity";
    case LimitRule::MExponential:
      return "MExponential";
    case LimitRule::MPolynomial:
      return "MPolynomial";
    case LimitRule::MOrigin:
      return "MOrigin";
  }
  return "?";
}

double LimitForm::value(double z) const {
  double lead = leading_coeff * std::pow(z, exponent);
  if (log_in_leading) lead *= std::log(z);
  if (exponential) lead *= std::exp(z);
  return lead + constant_term;
}

LimitForm m_large_z(const ExactParam& a, const ExactParam& b) {
  require_m_defined(b);
  if (a.is_nonpositive_integer()) {
    const std::int64_t m = -*a.integer_tag();
    // top coefficient (-m)_m / ((b)_m m!) = (-1)^m / (b)_m
    const double c = (m % 2 == 0 ? 1.0 : -1.0) / pochhammer(b, m);
    return form(LimitRule::MPolynomial, c, static_cast<double>(m), static_cast<double>(m - 1));
  }
  LimitForm f = form(LimitRule::MExponential, gamma_ratio(b.value(), a.value()), a.value() - b.value(),
                     a.value() - b.value() - 1.0);
  f.exponential = true;
  return f;
}

LimitForm m_small_z(const ExactParam& /*a*/, const ExactParam& b) {
  require_m_defined(b);
  return form(LimitRule::MOrigin, 1.0, 0.0, 1.0);
}

LimitForm u_large_z(const ExactParam& a, const ExactParam& /*b*/) {
  return form(LimitRule::UInfinity, 1.0, -a.value(), -a.value() - 1.0);
}

LimitForm u_small_z(const ExactParam& a, const ExactParam& b) {
  if (a.is_nonpositive_integer()) return polynomial_u_limit(-*a.integer_tag(), b);

  const auto diff = integer_difference(a, b);
  if (diff && 1 + *diff <= 0) {
    const std::int64_t q = -(1 + *diff);
    const double c = (q % 2 == 0 ? 1.0 : -1.0) * pochhammer(offset_difference(2, ExactParam::integer(0), b), q);
    return form(LimitRule::UPolynomialShifted, c, 1.0 - b.value(), 2.0 - b.value());
  }

  const double bv = b.value();
  const auto& tag = b.integer_tag();
  if (tag == 2) {
    LimitForm f = form(LimitRule::UBEquals2, rgamma(a.value()), -1.0, 0.0);
    f.log_flag = true;
    f.correction_log = true;
    return f;
  }
  if (tag == 1) {
    const double ra = rgamma(a.value());
    LimitForm f = form(LimitRule::UBEquals1, -ra, 0.0, 1.0);
    f.log_flag = true;
    f.log_in_leading = true;
    f.correction_log = true;
    f.constant_term = -ra * (digamma(a.value()) + 2.0 * kEulerGamma);
    return f;
  }
  if (tag == 0) {
    LimitForm f = form(LimitRule::UBEquals0, rgamma(1.0 + a.value()), 0.0, 1.0);
    f.correction_log = true;
    return f;
  }
  const ExactParam shifted = offset_difference(1, a, b);  // 1 + a - b, never in Z<=0 here
  if (bv > 2.0) return form(LimitRule::UBAbove2, gamma_ratio(bv - 1.0, a.value()), 1.0 - bv, 2.0 - bv);
  if (bv > 1.0) {
    LimitForm f = form(LimitRule::UBBetween1And2, gamma_ratio(bv - 1.0, a.value()), 1.0 - bv, 2.0 - bv);
    f.constant_term = gamma_ratio(1.0 - bv, shifted.value());
    return f;
  }
  if (bv > 0.0) return form(LimitRule::UBBetween0And1, gamma_ratio(1.0 - bv, shifted.value()), 0.0, 1.0 - bv);
  return form(LimitRule::UBNegative, gamma_ratio(1.0 - bv, shifted.value()), 0.0, 1.0);
}

double TwoTermForm::value_real(double z) const {
  return exponential_coeff * std::exp(z) * std::pow(z, exponential_exponent) +
         algebraic_coeff.real() * std::pow(z, algebraic_exponent);
}

TwoTermForm m_large_z_full(const ExactParam& a, const ExactParam& b, SectorPath path) {
  const ExactParam bma = offset_difference(0, b, a);
  if (a.is_nonpositive_integer() && bma.is_nonpositive_integer())
    throw DomainError("two-term large-z law for M excludes a in Z<=0 together with b - a in Z<=0");
  require_m_defined(b);
  constexpr double pi = std::numbers::pi;
  TwoTermForm t;
  t.path = path;
  const double gb = gamma_value(b.value());
  t.exponential_coeff = gb * rgamma(a.value());
  t.exponential_exponent = a.value() - b.value();
  const double sign = path == SectorPath::Upper ? 1.0 : -1.0;
  t.algebraic_coeff = gb * rgamma(bma.value()) * std::polar(1.0, sign * pi * a.value());
  t.algebraic_exponent = -a.value();
  t.sector_lo = path == SectorPath::Upper ? -pi / 2 : -3 * pi / 2;
  t.sector_hi = path == SectorPath::Upper ? 3 * pi / 2 : pi / 2;
  return t;
}

LimitCheckReport limit_check(SolutionKind fn, const ExactParam& a, const ExactParam& b, const std::vector<double>& grid,
                             const EvalConfig& cfg) {
  if (grid.size() < 2) throw std::invalid_argument("limit_check: at least two grid points");
  if (!std::is_sorted(grid.begin(), grid.end()) || std::adjacent_find(grid.begin(), grid.end()) != grid.end())
    throw std::invalid_argument("limit_check: grid must be strictly ascending");
  const bool small = grid.back() < 1.0;
  if (!small && grid.front() <= 1.0) throw std::invalid_argument("limit_check: grid straddles z = 1");
  if (grid.front() <= 0.0) throw std::invalid_argument("limit_check: grid must be positive");

  LimitCheckReport rep;
  rep.grid = grid;
  switch (fn) {
    case SolutionKind::KummerM:
      rep.form = small ? m_small_z(a, b) : m_large_z(a, b);
      break;
    case SolutionKind::TricomiU:
      rep.form = small ? u_small_z(a, b) : u_large_z(a, b);
      break;
    default:
      throw std::invalid_argument(std::string("limit_check: no limiting law for ") + to_string(fn));
  }
  const LimitForm& lf = rep.form;

  std::vector<double> g;  // leading term alone, stripped of e^z and ln z
  for (double z : grid) {
    const double f = fn == SolutionKind::KummerM ? kummer_m(a, b, z, cfg).value : tricomi_u(a, b, z, cfg).value;
    rep.values.push_back(f);
    const double expected = lf.value(z);
    rep.rel_deviation.push_back(std::fabs(f - expected) / std::fabs(expected));
    double h = f - lf.constant_term;
    if (lf.exponential) h *= std::exp(-z);
    if (lf.log_in_leading) h /= std::log(z);
    g.push_back(h);
  }

  const std::size_t n = grid.size();
  const double delta = lf.correction_order - lf.exponent;
  const bool model_correction = !lf.correction_log && delta != 0.0;

  if (model_correction && n >= 3) {
    // ln|g| = c0 + p ln z + d z^delta
    std::vector<std::vector<double>> rows;
    std::vector<double> ys;
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back({1.0, std::log(grid[i]), std::pow(grid[i], delta)});
      ys.push_back(std::log(std::fabs(g[i])));
    }
    rep.fitted_exponent = least_squares(rows, ys)[1];
  } else {
    const std::size_t i0 = small ? 0 : n - 2;
    rep.fitted_exponent = std::log(std::fabs(g[i0 + 1] / g[i0])) / std::log(grid[i0 + 1] / grid[i0]);
  }

  // coefficient: g / z^p = C + D z^delta (+ E z^{2 delta} with four or more
  // points), extrapolated with the known correction order when it carries
  // no logarithm
  if (model_correction) {
    const std::size_t terms = n >= 4 ? 3 : 2;
    std::vector<std::vector<double>> rows;
    std::vector<double> ys;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = std::pow(grid[i], delta);
      std::vector<double> row{1.0, x, x * x};
      row.resize(terms);
      rows.push_back(row);
      ys.push_back(g[i] / std::pow(grid[i], lf.exponent));
    }
    rep.fitted_coeff = least_squares(rows, ys)[0];
  } else {
    const std::size_t k = small ? 0 : n - 1;
    rep.fitted_coeff = g[k] / std::pow(grid[k], lf.exponent);
  }
  rep.exponent_error = std::fabs(rep.fitted_exponent - lf.exponent);
  rep.coeff_rel_error = std::fabs(rep.fitted_coeff - lf.leading_coeff) / std::fabs(lf.leading_coeff);
  return rep;
}

}  // namespace chf
