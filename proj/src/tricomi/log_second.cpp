// Logarithmic second solutions for a in Z<=0 with 1+a-b in Z<=0.

#include <cmath>
#include <limits>
#include <string>

#include "chf/detail/series_impl.hpp"
#include "chf/errors.hpp"
#include "chf/gamma.hpp"
#include "chf/tricomi.hpp"

namespace chf {

namespace {

using Acc = detail::TermAccumulator<double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct LogSecond {
  Jet<double> jet;
  LogSeriesParts parts;
  SeriesEval info;
};

double rising(double a, std::int64_t s) {
  double p = 1.0;
  for (std::int64_t k = 0; k < s; ++k) p *= a + static_cast<double>(k);
  return p;
}

// Adds t_s z^{s+shift} for s >= s0, where t_{s+1} = t_s * ratio(s) * z.
template <class Ratio>
double sum_tail(Acc& acc, double first, std::int64_t s0, double shift, double z, Ratio&& ratio,
                const EvalConfig& cfg, int& terms, double& err, const char* what) {
  double t = first;
  double total = 0.0;
  const double hump = std::fabs(z) + static_cast<double>(s0) + 2.0;
  detail::ConvergenceGate<double> gate(hump, cfg.tolerance);
  for (std::int64_t s = s0;; ++s) {
    const double v = t * std::pow(z, static_cast<double>(s) + shift);
    acc.add_power(v, static_cast<double>(s) + shift);
    total += v;
    ++terms;
    if (gate.step(static_cast<int>(s - s0 + 1), std::fabs(v), acc.jet().f)) {
      err += 2.0 * std::fabs(v * ratio(s) * z);
      break;
    }
    if (terms >= cfg.max_terms)
      throw NonConvergence(std::string(what) + ": tail did not converge within " + std::to_string(cfg.max_terms) +
                           " terms");
    t *= ratio(s);
  }
  return total;
}

void finish(LogSecond& r, const Acc& acc, int terms, double err) {
  r.jet = acc.jet();
  r.parts.value = r.jet.f;
  r.info.value = r.jet.f;
  r.info.abs_error_est = err + 16.0 * kEps * acc.magnitude();
  r.info.terms_used = terms;
  r.info.terminated = Termination::Converged;
}

// a = -m, b = 1 + n:
//   sum_{s=1}^n n!(s-1)!/((n-s)!(1+m)_s) z^{-s}
//   - sum_{s=0}^m (-m)_s/(1+n)_s z^s/s! [ln z + psi(1+m-s) - psi(1+s) - psi(1+s+n)]
//   + (-1)^{1+m} m! sum_{s>=1+m} (s-1-m)!/(n+1)_s z^s/s!
LogSecond case4c(std::int64_t m, std::int64_t n, double z, const EvalConfig& cfg) {
  if (m < 0 || n < 0) throw DomainError("second solution (a = -m, b = 1+n) requires m, n >= 0");
  if (!(z > 0.0)) throw DomainError("second solution requires z > 0");
  LogSecond r;
  Acc acc(z);
  int terms = 0;
  double err = 0.0;

  const double nf = factorial(n);
  for (std::int64_t s = 1; s <= n; ++s) {
    const double c = nf * factorial(s - 1) / (factorial(n - s) * rising(1.0 + static_cast<double>(m), s));
    const double v = c * std::pow(z, -static_cast<double>(s));
    acc.add_power(v, -static_cast<double>(s));
    r.parts.finite += v;
    ++terms;
  }

  for (std::int64_t s = 0; s <= m; ++s) {
    const double c = rising(-static_cast<double>(m), s) / rising(1.0 + static_cast<double>(n), s) *
                     std::pow(z, static_cast<double>(s)) / factorial(s);
    const double d = digamma(1.0 + static_cast<double>(m - s)) - digamma(1.0 + static_cast<double>(s)) -
                     digamma(1.0 + static_cast<double>(s + n));
    acc.add_power_log(-c, static_cast<double>(s));
    acc.add_power(-c * d, static_cast<double>(s));
    r.parts.log_coefficient -= c;
    r.parts.regular -= c * d;
    ++terms;
  }

  const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{1+m}
  const double first = sign * factorial(m) / (rising(1.0 + static_cast<double>(n), m + 1) * factorial(m + 1));
  const auto ratio = [m, n](std::int64_t s) {
    const double sd = static_cast<double>(s);
    return (sd - static_cast<double>(m)) / ((static_cast<double>(n) + 1.0 + sd) * (sd + 1.0));
  };
  r.parts.tail = sum_tail(acc, first, m + 1, 0.0, z, ratio, cfg, terms, err, "second solution (4.C)");
  finish(r, acc, terms, err);
  return r;
}

// a = -m, b = -n, m >= n + 1:
//   z^{n+1} { sum_{s=1}^{n+1} (n+1)!(s-1)!/((n-s+1)!(m-n)_s) z^{-s}
//   - sum_{s=0}^{m-n-1} (-m+n+1)_s/(n+2)_s z^s/s! [ln z + psi(m-n-s) - psi(1+s) - psi(2+s+n)]
//   + (-1)^{m+n}(m-n-1)! sum_{s>=m-n} (-m+n+s)!/(n+2)_s z^s/s! }
LogSecond case4b(std::int64_t m, std::int64_t n, double z, const EvalConfig& cfg) {
  if (n < 0 || m < n + 1) throw DomainError("second solution (a = -m, b = -n) requires n >= 0 and m >= n+1");
  if (!(z > 0.0)) throw DomainError("second solution requires z > 0");
  LogSecond r;
  Acc acc(z);
  int terms = 0;
  double err = 0.0;
  const double shift = static_cast<double>(n + 1);
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);

  const double n1f = factorial(n + 1);
  for (std::int64_t s = 1; s <= n + 1; ++s) {
    const double c = n1f * factorial(s - 1) / (factorial(n - s + 1) * rising(md - nd, s));
    const double p = shift - static_cast<double>(s);
    const double v = c * std::pow(z, p);
    acc.add_power(v, p);
    r.parts.finite += v;
    ++terms;
  }

  for (std::int64_t s = 0; s <= m - n - 1; ++s) {
    const double p = static_cast<double>(s) + shift;
    const double c = rising(-md + nd + 1.0, s) / rising(nd + 2.0, s) * std::pow(z, p) / factorial(s);
    const double d = digamma(md - nd - static_cast<double>(s)) - digamma(1.0 + static_cast<double>(s)) -
                     digamma(2.0 + static_cast<double>(s) + nd);
    acc.add_power_log(-c, p);
    acc.add_power(-c * d, p);
    r.parts.log_coefficient -= c;
    r.parts.regular -= c * d;
    ++terms;
  }

  const double sign = ((m + n) % 2 == 0) ? 1.0 : -1.0;
  const std::int64_t s0 = m - n;
  const double first = sign * factorial(m - n - 1) / (rising(nd + 2.0, s0) * factorial(s0));
  const auto ratio = [m, n](std::int64_t s) {
    const double sd = static_cast<double>(s);
    return (sd - static_cast<double>(m) + static_cast<double>(n) + 1.0) /
           ((static_cast<double>(n) + 2.0 + sd) * (sd + 1.0));
  };
  r.parts.tail = sum_tail(acc, first, s0, shift, z, ratio, cfg, terms, err, "second solution (4.B)");
  finish(r, acc, terms, err);
  return r;
}

}  // namespace

SeriesEval second_solution_case4B(std::int64_t m, std::int64_t n, double z, const EvalConfig& cfg) {
  return case4b(m, n, z, cfg).info;
}
Jet<double> second_solution_case4B_jet(std::int64_t m, std::int64_t n, double z, const EvalConfig& cfg) {
  return case4b(m, n, z, cfg).jet;
}
LogSeriesParts second_solution_case4B_parts(std::int64_t m, std::int64_t n, double z, const EvalConfig& cfg) {
  return case4b(m, n, z, cfg).parts;
}

SeriesEval second_solution_case4C(std::int64_t m, std::int64_t n, double z, const EvalConfig& cfg) {
  return case4c(m, n, z, cfg).info;
}
Jet<double> second_solution_case4C_jet(std::int64_t m, std::int64_t n, double z, const EvalConfig& cfg) {
  return case4c(m, n, z, cfg).jet;
}
LogSeriesParts second_solution_case4C_parts(std::int64_t m, std::int64_t n, double z, const EvalConfig& cfg) {
  return case4c(m, n, z, cfg).parts;
}

}  // namespace chf
