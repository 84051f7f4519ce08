#include "chf/kummer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chf/detail/extended.hpp"
#include "chf/detail/series_impl.hpp"
#include "chf/errors.hpp"

namespace chf {

namespace {

using detail::nonpositive_degree;
using detail::SeriesJet;

constexpr double kTransformBelow = -1.0;

constexpr unsigned kMaxDigits = 120;

template <class T>
SeriesEval to_eval(const SeriesJet<T>& s) {
  using O = detail::RealOps<T>;
  SeriesEval e;
  e.value = O::to_double(s.jet.f);
  e.abs_error_est = O::to_double(s.abs_error);
  e.terms_used = s.terms;
  e.terminated = s.termination;
  return e;
}

void require_converged(const SeriesEval& e, const EvalConfig& cfg, const char* what) {
  if (e.terminated != Termination::MaxTermsHit) return;
  if (e.abs_error_est <= cfg.tolerance * std::max(1.0, std::fabs(e.value))) return;
  throw NonConvergence(std::string(what) + ": series did not converge within " + std::to_string(cfg.max_terms) +
                       " terms");
}

template <class T>
SeriesJet<T> sum_m(const ExactParam& a, const ExactParam& b, const T& z, const EvalConfig& cfg) {
  using O = detail::RealOps<T>;
  const auto degree = nonpositive_degree(a.integer_tag());
  const T av = O::from_double(a.value());
  const T bv = O::from_double(b.value());
  if (z < T(kTransformBelow) && !degree) {
    const ExactParam bma = offset_difference(0, b, a);
    SeriesJet<T> h = detail::m_power_series(O::from_double(bma.value()), bv, T(-z),
                                            nonpositive_degree(bma.integer_tag()), cfg);
    const T e = O::exp(z);
    SeriesJet<T> s = h;
    s.jet = exp_times_reflected(h.jet, z, [](const T& x) { return O::exp(x); });
    s.abs_error = e * h.abs_error;
    s.magnitude = e * h.magnitude;
    // the transformed series terminates only when b - a is in Z<=0; the
    // original series still reports as a converged infinite series
    if (s.termination == Termination::PolynomialExact) s.termination = Termination::Converged;
    return s;
  }
  return detail::m_power_series(av, bv, z, degree, cfg);
}

bool accurate(const SeriesJet<double>& s, double tol) {
  return std::isfinite(s.jet.f) && std::isfinite(s.jet.d1) && std::isfinite(s.jet.d2) &&
         s.abs_error <= tol * std::fabs(s.jet.f);
}

}  // namespace

Jet<double> kummer_m_jet(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg, SeriesEval* info) {
  if (b.is_nonpositive_integer())
    throw UndefinedFunction("M(a,b,z) is not defined for b a non-positive integer (b = " + b.to_string() + ")");
  if (!std::isfinite(z)) throw DomainError("M(a,b,z): non-finite z");

  const SeriesJet<double> s = sum_m<double>(a, b, z, cfg);
  SeriesEval e = to_eval(s);
  require_converged(e, cfg, "M(a,b,z)");
  if (accurate(s, cfg.tolerance) || s.jet.f == 0.0) {
    if (info) *info = e;
    return s.jet;
  }

  // cancellation: re-sum with enough digits to absorb magnitude / |M|
  const double ratio = std::isfinite(s.magnitude / s.jet.f) ? std::fabs(s.magnitude / s.jet.f) : 1e30;
  unsigned digits = static_cast<unsigned>(std::clamp(24.0 + std::ceil(std::log10(std::max(1.0, ratio))), 24.0,
                                                     static_cast<double>(kMaxDigits)));
  for (;;) {
    detail::PrecisionScope scope(digits);
    EvalConfig ecfg = cfg;
    ecfg.tolerance = std::pow(10.0, -static_cast<double>(digits) + 3.0);
    const SeriesJet<detail::Extended> x = sum_m<detail::Extended>(a, b, detail::Extended(z), ecfg);
    const SeriesEval xe = to_eval(x);
    require_converged(xe, cfg, "M(a,b,z)");
    const bool ok = xe.abs_error_est <= 1e-2 * cfg.tolerance * std::fabs(xe.value);
    if (ok || digits >= kMaxDigits) {
      e = xe;
      e.abs_error_est += 0.5 * detail::RealOps<double>::eps() * std::fabs(e.value);
      e.warnings = kCancellation | kExtendedPrecision;
      if (info) *info = e;
      using O = detail::RealOps<detail::Extended>;
      return {O::to_double(x.jet.f), O::to_double(x.jet.d1), O::to_double(x.jet.d2)};
    }
    digits = std::min(kMaxDigits, digits + 24);
  }
}

SeriesEval kummer_m(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg) {
  SeriesEval e;
  kummer_m_jet(a, b, z, cfg, &e);
  return e;
}

Jet<double> m_tilde_jet(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg, SeriesEval* info) {
  if (b.is_integer_at_least(2))
    throw UndefinedFunction("M~(a,b,z) is not defined for b an integer >= 2 (b = " + b.to_string() + ")");
  if (!(z > 0.0)) throw DomainError("M~(a,b,z) requires z > 0");
  if (b.integer_tag() == 1) return kummer_m_jet(a, b, z, cfg, info);

  const ExactParam a1 = offset_difference(1, a, b);
  const ExactParam b1 = offset_difference(2, ExactParam::integer(0), b);
  SeriesEval inner;
  const Jet<double> g = kummer_m_jet(a1, b1, z, cfg, &inner);
  const double p = 1.0 - b.value();
  const double zp = std::pow(z, p);
  const Jet<double> r = times_power(g, z, p, [](double x, double y) { return std::pow(x, y); });
  if (info) {
    *info = inner;
    info->value = r.f;
    info->abs_error_est = inner.abs_error_est * zp;
  }
  return r;
}

SeriesEval m_tilde(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg) {
  SeriesEval e;
  m_tilde_jet(a, b, z, cfg, &e);
  return e;
}

}  // namespace chf
