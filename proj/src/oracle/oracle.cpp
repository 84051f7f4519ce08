#include "chf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "chf/detail/extended.hpp"
#include "chf/errors.hpp"

namespace chf::oracle {

namespace {

using detail::Extended;

double kummer_operator(double a, double b, double z, const Jet<double>& w) {
  return z * w.d2 + (b - z) * w.d1 - a * w.f;
}

}  // namespace

ResidualReport ode_residual_from_jets(double a, double b, const std::vector<double>& z_samples,
                                      const std::vector<Jet<double>>& jets) {
  if (jets.size() != z_samples.size()) throw std::invalid_argument("ode_residual: one jet per sample");
  ResidualReport r;
  r.sample_points = z_samples;
  double worst = 0.0;
  for (std::size_t i = 0; i < jets.size(); ++i) {
    const Jet<double>& w = jets[i];
    const double z = z_samples[i];
    r.scale = std::max(r.scale, (std::fabs(w.f) + std::fabs(w.d1) + std::fabs(w.d2)) * (1.0 + std::fabs(z)));
    worst = std::max(worst, std::fabs(kummer_operator(a, b, z, w)));
  }
  if (r.scale == 0.0) {
    r.degenerate = true;
    return r;
  }
  r.max_scaled_residual = worst / r.scale;
  return r;
}

ResidualReport ode_residual(const SolutionDescriptor& solution, const ExactParam& a, const ExactParam& b,
                            const std::vector<double>& z_samples, const EvalConfig& cfg) {
  std::vector<Jet<double>> jets;
  jets.reserve(z_samples.size());
  for (double z : z_samples) jets.push_back(evaluate_solution(solution, a, b, z, cfg));
  return ode_residual_from_jets(a.value(), b.value(), z_samples, jets);
}

Jet<double> central_difference_jet(const std::function<double(double)>& w, double z) {
  const double h = 1e-5 * (z == 0.0 ? 1.0 : std::fabs(z));
  const double fm2 = w(z - 2 * h), fm1 = w(z - h), f0 = w(z), fp1 = w(z + h), fp2 = w(z + 2 * h);
  Jet<double> j;
  j.f = f0;
  j.d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
  j.d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h);
  return j;
}

ResidualReport ode_residual_fd(const std::function<double(double)>& w, double a, double b,
                               const std::vector<double>& z_samples) {
  std::vector<Jet<double>> jets;
  jets.reserve(z_samples.size());
  for (double z : z_samples) jets.push_back(central_difference_jet(w, z));
  return ode_residual_from_jets(a, b, z_samples, jets);
}

double wronskian(const Jet<double>& f, const Jet<double>& g) { return f.f * g.d1 - f.d1 * g.f; }

double wronskian(const SolutionDescriptor& f, const SolutionDescriptor& g, const ExactParam& a, const ExactParam& b,
                 double z, const EvalConfig& cfg) {
  return wronskian(evaluate_solution(f, a, b, z, cfg), evaluate_solution(g, a, b, z, cfg));
}

WronskianCertificate certify_pair(const SolutionDescriptor& f, const SolutionDescriptor& g, const ExactParam& a,
                                  const ExactParam& b, double z, double threshold, const EvalConfig& cfg) {
  const Jet<double> jf = evaluate_solution(f, a, b, z, cfg);
  const Jet<double> jg = evaluate_solution(g, a, b, z, cfg);
  WronskianCertificate c;
  c.wronskian = wronskian(jf, jg);
  c.scale = (std::fabs(jf.f) + std::fabs(jf.d1)) * (std::fabs(jg.f) + std::fabs(jg.d1));
  c.independent = std::isfinite(c.wronskian) && c.scale > 0.0 && std::fabs(c.wronskian) > threshold * c.scale;
  return c;
}

HighPrecValue highprec_m(const ExactParam& a, const ExactParam& b, double z, unsigned digits) {
  if (digits < 10 || digits > 100) throw std::invalid_argument("highprec_m: digits must lie in [10, 100]");
  if (b.is_nonpositive_integer()) throw UndefinedFunction("M(a,b,z) is undefined for b in Z<=0");

  // terms reach e^{|z|} before decaying; guard digits cover the cancellation
  const unsigned guard = 10 + static_cast<unsigned>(std::ceil(2.0 * std::fabs(z) / std::log(10.0)));
  detail::PrecisionScope scope(digits + guard);
  const Extended av(a.value()), bv(b.value()), zv(z);
  const Extended cutoff = boost::multiprecision::pow(Extended(10), -static_cast<long>(digits + guard / 2));

  Extended term(1), sum(1);
  int s = 0;
  const int cap = 100000;
  for (; s < cap; ++s) {
    term *= (av + s) * zv / ((bv + s) * (s + 1));
    sum += term;
    if (term == 0) break;
    // past the largest term, stop once terms are negligible
    if (std::fabs(z) < s + 1 && boost::multiprecision::abs(term) <= cutoff * boost::multiprecision::abs(sum)) break;
  }
  if (s == cap) throw NonConvergence("highprec_m: series did not converge");

  HighPrecValue out;
  out.value = sum.convert_to<double>();
  out.decimal = sum.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
  out.digits = digits;
  out.terms = s + 1;
  return out;
}

Rational rational_m_polynomial(std::int64_t m, const Rational& b, const Rational& z) {
  if (m < 0) throw std::invalid_argument("rational_m_polynomial: m must be >= 0");
  // Horner from the top coefficient: c_{s+1}/c_s = (s - m) / ((b + s)(s + 1))
  Rational acc(1);
  for (std::int64_t s = m - 1; s >= 0; --s) {
    const Rational ratio = Rational(s - m) / ((b + Rational(s)) * Rational(s + 1));
    acc = Rational(1) + ratio * z * acc;
  }
  return acc;
}

std::vector<CaseId> realizable_cells() {
  std::vector<CaseId> out;
  for (int row = 1; row <= 6; ++row)
    for (BColumn col : {BColumn::A, BColumn::B, BColumn::C}) {
      const CaseId id{row, col};
      if (!id.is_dno()) out.push_back(id);
    }
  return out;
}

namespace {

std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Non-integer in (lo, hi): dyadic k/8 or an unrestricted double.
ExactParam non_integer(std::mt19937_64& rng, double lo, double hi, bool dyadic_only = false) {
  for (;;) {
    double x;
    if (dyadic_only || pick(rng, 0, 1) == 0) {
      x = static_cast<double>(pick(rng, static_cast<std::int64_t>(lo * 8) + 1, static_cast<std::int64_t>(hi * 8) - 1)) /
          8.0;
    } else {
      x = std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    ExactParam p(x);
    if (!p.is_integer()) return p;
  }
}

ParamDraw candidate(const CaseId& cell, std::mt19937_64& rng) {
  using I = ExactParam;
  const std::string c = cell.to_string();
  if (c == "1.A") {
    const ExactParam b = non_integer(rng, -6, 6);
    if (pick(rng, 0, 3) == 0) {
      const ExactParam bd = non_integer(rng, -6, 6, true);
      return {ExactParam(bd.value() + static_cast<double>(pick(rng, 0, 4))), bd};  // a - b in Z>=0
    }
    return {non_integer(rng, -6, 6), b};
  }
  if (c == "2.A") {
    const ExactParam b = non_integer(rng, -4, 6, true);
    return {ExactParam(b.value() - 1.0 - static_cast<double>(pick(rng, 0, 4))), b};
  }
  if (c == "1.B") return {non_integer(rng, -6, 6), I::integer(-pick(rng, 0, 5))};
  if (c == "1.C") return {non_integer(rng, -6, 6), I::integer(1 + pick(rng, 0, 5))};
  if (c == "3.A") return {I::integer(-pick(rng, 0, 6)), non_integer(rng, -6, 6)};
  if (c == "3.B") {
    const std::int64_t n = pick(rng, 0, 6);
    return {I::integer(-pick(rng, 0, n)), I::integer(-n)};
  }
  if (c == "4.B") {
    const std::int64_t n = pick(rng, 0, 5);
    return {I::integer(-(n + 1 + pick(rng, 0, 2))), I::integer(-n)};
  }
  if (c == "4.C") return {I::integer(-pick(rng, 0, 6)), I::integer(1 + pick(rng, 0, 5))};
  if (c == "5.A") return {I::integer(pick(rng, 1, 6)), non_integer(rng, -6, 6)};
  if (c == "5.B") return {I::integer(pick(rng, 1, 6)), I::integer(-pick(rng, 0, 5))};
  if (c == "5.C") {
    const std::int64_t m = pick(rng, 1, 7);
    return {I::integer(m), I::integer(1 + pick(rng, 0, m - 1))};
  }
  if (c == "6.C") {
    const std::int64_t m = pick(rng, 1, 5);
    return {I::integer(m), I::integer(m + 1 + pick(rng, 0, 3))};
  }
  throw std::invalid_argument("draw_for_cell: cell " + c + " does not occur");
}

}  // namespace

ParamDraw draw_for_cell(const CaseId& cell, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ParamDraw d = candidate(cell, rng);
    if (classify(d.a, d.b) == cell) return d;
  }
  throw std::logic_error("draw_for_cell: no parameters found for " + cell.to_string());
}

}  // namespace chf::oracle
