#include "chf/tricomi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chf/detail/extended.hpp"
#include "chf/detail/series_impl.hpp"
#include "chf/errors.hpp"
#include "chf/gamma.hpp"

namespace chf {

namespace {

using detail::Extended;
using detail::ParamTags;
using detail::PrecisionScope;
using detail::RealOps;
using detail::SeriesJet;

constexpr double kAsymptoticFrom = 12.0;
constexpr double kNearIntegerB = 1e-6;
constexpr unsigned kMaxDigits = 120;

struct Routed {
  URoute route = URoute::NonIntegerBCombination;
  const char* formula = "";
};

template <class T>
SeriesJet<T> scale_by_power(SeriesJet<T> s, const T& z, const T& p) {
  using O = RealOps<T>;
  const T zp = O::pow(z, p);
  s.jet = times_power(s.jet, z, p, [](const T& x, const T& y) { return O::pow(x, y); });
  s.abs_error *= zp;
  s.magnitude *= zp;
  return s;
}

template <class T>
SeriesJet<T> dispatch(const ExactParam& a, const ExactParam& b, const T& z, const EvalConfig& cfg,
                      bool allow_asymptotic, Routed& how) {
  using O = RealOps<T>;
  const T av = O::from_double(a.value());
  const T bv = O::from_double(b.value());

  if (a.is_nonpositive_integer()) {
    how = {URoute::PolynomialProportional, "13.2.7"};
    return detail::u_polynomial_a(-*a.integer_tag(), bv, z);
  }
  const auto diff = integer_difference(a, b);
  if (!b.is_integer() && diff && 1 + *diff <= 0) {
    how = {URoute::PolynomialProportional, "13.2.8"};
    return detail::u_polynomial_shifted(av, -(1 + *diff), z);
  }
  if (allow_asymptotic && O::to_double(z) >= kAsymptoticFrom) {
    if (auto s = detail::u_asymptotic(av, bv, z, cfg)) {
      how = {URoute::LargeZAsymptotic, "asymptotic"};
      return *s;
    }
  }
  if (b.is_integer()) {
    const std::int64_t k = *b.integer_tag();
    if (k >= 1) {
      // the logarithmic sum drops out by itself when a - (k-1) is in Z<=0
      how = {URoute::IntegerBLogSeries, "13.2.9"};
      return detail::u_log_series(av, k - 1, z, a.integer_tag(), cfg);
    }
    // U(a, -n, z) = z^{n+1} U(a+n+1, n+2, z)
    const std::int64_t n = -k;
    std::optional<std::int64_t> shifted_tag;
    if (a.integer_tag()) shifted_tag = *a.integer_tag() + n + 1;
    how = {URoute::IntegerBLogSeries, "13.2.11+13.2.9"};
    auto inner = detail::u_log_series(av + T(n + 1), n + 1, z, shifted_tag, cfg);
    return scale_by_power(inner, z, T(n + 1));
  }
  how = {URoute::NonIntegerBCombination, "combination"};
  ParamTags tags{a.integer_tag(), diff ? std::optional<std::int64_t>(1 + *diff) : std::nullopt};
  return detail::u_combination(av, bv, z, tags, cfg);
}

template <class T>
SeriesEval to_eval(const SeriesJet<T>& s) {
  using O = RealOps<T>;
  SeriesEval e;
  e.value = O::to_double(s.jet.f);
  e.abs_error_est = O::to_double(s.abs_error);
  e.terms_used = s.terms;
  e.terminated = s.termination;
  return e;
}

template <class T>
Jet<double> to_double_jet(const Jet<T>& j) {
  using O = RealOps<T>;
  return {O::to_double(j.f), O::to_double(j.d1), O::to_double(j.d2)};
}

template <class T>
bool accurate(const SeriesJet<T>& s, double tol) {
  using O = RealOps<T>;
  const double f = O::to_double(s.jet.f);
  const double err = O::to_double(s.abs_error);
  if (!std::isfinite(f) || !std::isfinite(O::to_double(s.jet.d1)) || !std::isfinite(O::to_double(s.jet.d2)))
    return false;
  return err <= tol * std::fabs(f);
}

double cancellation_ratio(double magnitude, double value) {
  if (!std::isfinite(magnitude) || !std::isfinite(value) || value == 0.0) return 1e30;
  return std::max(1.0, magnitude / std::fabs(value));
}

unsigned digits_for(double ratio, unsigned base) {
  const double d = static_cast<double>(base) + std::ceil(std::log10(std::max(1.0, ratio)));
  return static_cast<unsigned>(std::clamp(d, static_cast<double>(base), static_cast<double>(kMaxDigits)));
}

EvalConfig extended_config(const EvalConfig& cfg, unsigned digits) {
  EvalConfig e = cfg;
  e.tolerance = std::pow(10.0, -static_cast<double>(digits) + 3.0);
  return e;
}

void throw_if_capped(Termination t, const char* what, const EvalConfig& cfg) {
  if (t == Termination::MaxTermsHit)
    throw NonConvergence(std::string(what) + ": series did not converge within " + std::to_string(cfg.max_terms) +
                         " terms");
}

}  // namespace

const char* to_string(URoute r) {
  switch (r) {
    case URoute::NonIntegerBCombination:
      return "NonIntegerBCombination";
    case URoute::IntegerBLogSeries:
      return "IntegerBLogSeries";
    case URoute::PolynomialProportional:
      return "PolynomialProportional";
    case URoute::EpsilonLimit:
      return "EpsilonLimit";
    case URoute::LargeZAsymptotic:
      return "LargeZAsymptotic";
  }
  return "?";
}

USolutionRecipe tricomi_recipe(const CaseId& id) {
  if (id.is_dno()) throw std::invalid_argument("tricomi_recipe: cell " + id.to_string() + " does not occur");
  const std::string cell = id.to_string();
  if (cell == "1.A" || cell == "5.A") return {URoute::NonIntegerBCombination, "13.2.42", false};
  if (cell == "2.A") return {URoute::PolynomialProportional, "13.2.8", false};
  if (cell == "3.A") return {URoute::PolynomialProportional, "13.2.7", false};
  if (cell == "1.B" || cell == "5.B") return {URoute::IntegerBLogSeries, "13.2.11+13.2.9", true};
  if (cell == "1.C" || cell == "5.C") return {URoute::IntegerBLogSeries, "13.2.9", true};
  if (cell == "3.B") return {URoute::PolynomialProportional, "13.2.7", false};
  if (cell == "4.B") return {URoute::PolynomialProportional, "13.2.7", true};
  if (cell == "4.C") return {URoute::PolynomialProportional, "13.2.7", true};
  // 6.C: the logarithmic sum of 13.2.9 vanishes because a - (b-1) <= 0
  return {URoute::IntegerBLogSeries, "13.2.9", false};
}

UEvaluation tricomi_u_detail(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg,
                             const UOptions& opts) {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("U(a,b,z) is evaluated on the principal branch only: z > 0");

  const double frac = std::fabs(b.value() - std::nearbyint(b.value()));
  const bool near_integer_b = !b.is_integer() && frac < kNearIntegerB;

  UEvaluation out;
  Routed how;
  double ratio = 1.0;
  if (!near_integer_b) {
    const SeriesJet<double> s = dispatch<double>(a, b, z, cfg, opts.allow_asymptotic, how);
    throw_if_capped(s.termination, "U(a,b,z)", cfg);
    out.route = how.route;
    out.formula = how.formula;
    if (accurate(s, cfg.tolerance) || !opts.allow_extended) {
      out.jet = s.jet;
      out.info = to_eval(s);
      return out;
    }
    ratio = cancellation_ratio(s.magnitude, s.jet.f);
    out.info.warnings |= kCancellation;
  } else {
    ratio = 1.0 / frac;
    out.info.warnings |= kCancellation;
  }

  unsigned digits = digits_for(ratio, 24);
  for (;;) {
    PrecisionScope scope(digits);
    const EvalConfig ecfg = extended_config(cfg, digits);
    const SeriesJet<Extended> s = dispatch<Extended>(a, b, Extended(z), ecfg, opts.allow_asymptotic, how);
    throw_if_capped(s.termination, "U(a,b,z)", cfg);
    if (accurate(s, cfg.tolerance * 1e-2) || digits >= kMaxDigits) {
      const std::uint32_t warnings = out.info.warnings | kExtendedPrecision;
      out.jet = to_double_jet(s.jet);
      out.info = to_eval(s);
      out.info.abs_error_est += 0.5 * RealOps<double>::eps() * std::fabs(out.info.value);
      out.info.warnings = warnings;
      out.route = how.route;
      out.formula = how.formula;
      return out;
    }
    digits = std::min(kMaxDigits, digits + 24);
  }
}

SeriesEval tricomi_u(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg) {
  return tricomi_u_detail(a, b, z, cfg).info;
}

Jet<double> tricomi_u_jet(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg) {
  return tricomi_u_detail(a, b, z, cfg).jet;
}

SeriesEval tricomi_u_noninteger_b(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg) {
  if (b.is_integer()) throw DomainError("combination formula requires non-integer b (b = " + b.to_string() + ")");
  if (!(z > 0.0)) throw DomainError("U(a,b,z) requires z > 0");
  const auto diff = integer_difference(a, b);
  ParamTags tags{a.integer_tag(), diff ? std::optional<std::int64_t>(1 + *diff) : std::nullopt};
  const SeriesJet<double> s = detail::u_combination(a.value(), b.value(), z, tags, cfg);
  throw_if_capped(s.termination, "U(a,b,z)", cfg);
  SeriesEval e = to_eval(s);
  if (s.magnitude > 1e6 * std::fabs(s.jet.f)) e.warnings |= kCancellation;
  return e;
}

SeriesEval tricomi_u_epsilon_limit(const ExactParam& a, std::int64_t b_int, double z, const EvalConfig& cfg) {
  if (!(z > 0.0)) throw DomainError("U(a,b,z) requires z > 0");
  const ParamTags tags{a.integer_tag(), std::nullopt};

  unsigned digits = 50;
  for (;;) {
    PrecisionScope scope(digits);
    const EvalConfig ecfg = extended_config(cfg, digits);
    const Extended av(a.value());
    const Extended zv(z);
    const Extended bv(static_cast<double>(b_int));
    Extended worst_ratio(1);
    int terms = 0;
    auto symmetric = [&](const Extended& eps) {
      const auto up = detail::u_combination(av, bv + eps, zv, tags, ecfg);
      const auto dn = detail::u_combination(av, bv - eps, zv, tags, ecfg);
      throw_if_capped(up.termination, "epsilon limit", cfg);
      throw_if_capped(dn.termination, "epsilon limit", cfg);
      terms += up.terms + dn.terms;
      const Extended mean = (up.jet.f + dn.jet.f) / 2;
      const Extended mag = up.magnitude + dn.magnitude;
      if (mean != 0) worst_ratio = std::max(worst_ratio, Extended(mag / boost::multiprecision::abs(mean)));
      return mean;
    };
    const Extended e0 = Extended(1) / 1000;
    const Extended s0 = symmetric(e0);
    const Extended s1 = symmetric(e0 / 2);
    const Extended s2 = symmetric(e0 / 4);
    const Extended r1a = (4 * s1 - s0) / 3;
    const Extended r1b = (4 * s2 - s1) / 3;
    const Extended r2 = (16 * r1b - r1a) / 15;

    // lost digits from the combination itself; retry with more if needed
    const double lost = std::log10(worst_ratio.convert_to<double>());
    if (static_cast<double>(digits) - lost < 25.0 && digits < kMaxDigits) {
      digits = std::min(kMaxDigits, digits + static_cast<unsigned>(std::ceil(lost)));
      continue;
    }
    SeriesEval e;
    e.value = r2.convert_to<double>();
    e.abs_error_est = boost::multiprecision::abs(r2 - r1b).convert_to<double>();
    e.terms_used = terms;
    e.terminated = Termination::Converged;
    e.warnings = kExtendedPrecision;
    if (!(e.abs_error_est <= 1e-8 * std::fabs(e.value)))
      throw NonConvergence("epsilon limit: Richardson extrapolants disagree (" + std::to_string(e.abs_error_est) +
                           ")");
    return e;
  }
}

double kummer_transform_second_check(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg) {
  const double lhs = tricomi_u(a, b, z, cfg).value;
  const ExactParam a1 = offset_difference(1, a, b);
  const ExactParam b1 = offset_difference(2, ExactParam::integer(0), b);
  const double rhs = std::pow(z, 1.0 - b.value()) * tricomi_u(a1, b1, z, cfg).value;
  return std::fabs(lhs - rhs) / std::fabs(lhs);
}

}  // namespace chf
