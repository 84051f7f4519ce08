#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "chf/asymptotics.hpp"
#include "chf/kummer.hpp"
#include "chf/physics.hpp"
#include "chf/tricomi.hpp"

namespace chf::physics {

namespace {

constexpr double kQuadTol = 1e-14;
// past this e^{-x} times any polynomial of moderate degree is below the smallest double
constexpr double kUnderflowX = 2000.0;

struct Representative {
  const char* cell;
  double a;
};

// One parameter point per cell of the column; only the cell matters for the verdicts.
std::vector<Representative> column_walk(int branch, int ell) {
  const double l = ell;
  if (branch == 1) return {{"1.C", l - 0.5}, {"5.C", 2 * l + 2}, {"6.C", 1.0}, {"4.C", 0.0}};
  return {{"1.B", -l - 1.5}, {"3.B", 0.0}, {"5.B", 1.0}, {"4.B", -1.0 - 2 * l}};
}

ExactParam tagged(double x) { return ExactParam(x); }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

bool log_coefficient_nonzero(SolutionKind kind, const ExactParam& a, const ExactParam& b) {
  const std::int64_t m = -*a.integer_tag();
  const LogSeriesParts p = kind == SolutionKind::LogSecond4C
                               ? second_solution_case4C_parts(m, *b.integer_tag() - 1, 1.0)
                               : second_solution_case4B_parts(m, -*b.integer_tag(), 1.0);
  return p.log_coefficient != 0.0;
}

TraceEntry examine(const CaseId& id, const SolutionDescriptor& d, const ExactParam& a, const ExactParam& b,
                   const std::vector<SolutionKind>& accepted) {
  TraceEntry e;
  e.id = id;
  e.solution = d.kind;
  e.a = a.value();
  e.b = b.value();
  const double half_b = 0.5 * b.value();  // chi = e^{-z/2} z^{b/2} w

  auto reject = [&](RejectReason r, std::string why) {
    e.verdict = Verdict::Rejected;
    e.reason = r;
    e.detail = std::move(why);
    return e;
  };

  switch (d.kind) {
    case SolutionKind::KummerM: {
      const LimitForm lf = m_large_z(a, b);
      if (lf.exponential) return reject(RejectReason::DivergesAtInfinity, "M ~ Gamma(b)/Gamma(a) e^z z^{a-b}, chi ~ e^{z/2}");
      if (half_b <= 0.0) return reject(RejectReason::SmallZDivergence, "chi ~ z^{b/2} does not vanish at the origin");
      e.verdict = Verdict::Accepted;
      e.detail = "M is a polynomial of degree " + std::to_string(static_cast<int>(lf.exponent)) + "; chi ~ z^{b/2}";
      return e;
    }
    case SolutionKind::MTilde: {
      const LimitForm lf = m_large_z(offset_difference(1, a, b), offset_difference(2, ExactParam::integer(0), b));
      if (lf.exponential)
        return reject(RejectReason::DivergesAtInfinity, "M~ ~ z^{1-b} e^z z^{a-b}, chi ~ e^{z/2}: 1+a-b not in Z<=0");
      const double p = half_b + 1.0 - b.value();
      if (p <= 0.0) return reject(RejectReason::SmallZDivergence, "chi ~ z^{1-b/2} does not vanish at the origin");
      e.verdict = Verdict::Accepted;
      e.detail = "M~ = z^{1-b} x polynomial of degree " + std::to_string(static_cast<int>(lf.exponent)) +
                 "; chi ~ z^{1-b/2}";
      return e;
    }
    case SolutionKind::TricomiU: {
      if (d.has_log_term) return reject(RejectReason::LogTerm, "U carries a ln z term at the origin");
      if (d.proportional_to) {
        for (SolutionKind k : accepted)
          if (k == *d.proportional_to) {
            e.verdict = Verdict::SameAsAccepted;
            e.reason = RejectReason::ProportionalToAccepted;
            e.detail = std::string("U is proportional to ") + to_string(k);
            return e;
          }
      }
      const LimitForm lf = u_small_z(a, b);
      const double p = half_b + lf.exponent;
      if (p <= 0.0)
        return reject(RejectReason::SmallZDivergence,
                      "U ~ z^" + num(lf.exponent) + " at the origin, chi ~ z^" + num(p));
      e.verdict = Verdict::Accepted;
      e.detail = "U ~ z^{-a} at infinity and chi vanishes at the origin";
      return e;
    }
    case SolutionKind::LogSecond4B:
    case SolutionKind::LogSecond4C:
      if (log_coefficient_nonzero(d.kind, a, b))
        return reject(RejectReason::LogTerm, "(a)_0 = 1, so the ln z coefficient never vanishes");
      e.verdict = Verdict::Accepted;
      return e;
  }
  return e;
}

std::vector<SolutionDescriptor> distinct_solutions(const SolutionBasis& basis) {
  std::vector<SolutionDescriptor> out;
  auto add = [&](const SolutionDescriptor& d) {
    for (const auto& x : out)
      if (x.kind == d.kind) return;
    out.push_back(d);
  };
  add(basis.first);
  add(basis.second);
  for (const auto& p : basis.alternatives) {
    add(p.first);
    add(p.second);
  }
  return out;
}

double integrate_half_line(const std::function<double(double)>& f) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), kQuadTol);
}

// Composite Simpson on a non-uniform grid; a trailing odd interval uses the trapezoid.
double simpson(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  std::size_t i = 0;
  for (; i + 2 < x.size(); i += 2) {
    const double h0 = x[i + 1] - x[i], h1 = x[i + 2] - x[i + 1];
    const double h = h0 + h1;
    s += h / 6.0 * ((2.0 - h1 / h0) * y[i] + h * h / (h0 * h1) * y[i + 1] + (2.0 - h0 / h1) * y[i + 2]);
  }
  if (i + 1 < x.size()) s += 0.5 * (x[i + 1] - x[i]) * (y[i] + y[i + 1]);
  return s;
}

void require_quantum_numbers(int n, int ell) {
  if (ell < 0 || n < ell + 1) throw std::invalid_argument("radial function needs n >= l + 1 >= 1");
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Accepted:
      return "accepted";
    case Verdict::Rejected:
      return "rejected";
    case Verdict::SameAsAccepted:
      return "same-as-accepted";
  }
  return "?";
}

const char* to_string(RejectReason r) {
  switch (r) {
    case RejectReason::None:
      return "none";
    case RejectReason::DivergesAtInfinity:
      return "diverges-at-infinity";
    case RejectReason::LogTerm:
      return "log-term";
    case RejectReason::SmallZDivergence:
      return "small-z-divergence";
    case RejectReason::ProportionalToAccepted:
      return "proportional-to-accepted";
  }
  return "?";
}

std::pair<double, int> branch_parameters(int branch, int ell, double nu) {
  if (branch == 1) return {ell + 1 - nu, 2 * (ell + 1)};
  if (branch == 2) return {-ell - nu, -2 * ell};
  throw std::invalid_argument("branch must be 1 or 2");
}

double coulomb_strength(double Z, double k, double reduced_bohr_radius) { return 2.0 * Z / (2.0 * k * reduced_bohr_radius); }

BoundStateSpectrum hydrogen_solve(const HydrogenicConfig& config, int n_max) {
  if (config.ell < 0) throw std::invalid_argument("hydrogen_solve: l must be >= 0");
  if (!(config.Z > 0.0)) throw std::invalid_argument("hydrogen_solve: Z must be positive");
  if (!(config.reduced_bohr_radius > 0.0)) throw std::invalid_argument("hydrogen_solve: a0 must be positive");
  if (config.branch != 1 && config.branch != 2) throw std::invalid_argument("hydrogen_solve: branch must be 1 or 2");
  if (n_max < config.ell + 1) throw std::invalid_argument("hydrogen_solve: n_max must be >= l + 1");

  BoundStateSpectrum out;
  out.config = config;
  const ExactParam b = ExactParam::integer(config.branch == 1 ? 2 * (config.ell + 1) : -2 * config.ell);

  std::optional<CaseId> accepted_cell;
  for (const Representative& rep : column_walk(config.branch, config.ell)) {
    const ExactParam a = tagged(rep.a);
    const CaseId id = classify(a, b);
    if (id.to_string() != rep.cell) throw std::logic_error("hydrogen_solve: representative left its cell");
    std::vector<SolutionKind> accepted;
    for (const SolutionDescriptor& d : distinct_solutions(basis_for(id, a, b))) {
      TraceEntry e = examine(id, d, a, b, accepted);
      if (e.verdict == Verdict::Accepted) {
        accepted.push_back(d.kind);
        accepted_cell = id;
      }
      out.case_trace.push_back(std::move(e));
    }
  }
  if (!accepted_cell) throw std::logic_error("hydrogen_solve: no cell accepted");

  for (int n = config.ell + 1; n <= n_max; ++n) {
    BoundState s;
    s.n = n;
    s.ell = config.ell;
    s.n_r = n - config.ell - 1;
    const auto [a, bv] = branch_parameters(config.branch, config.ell, static_cast<double>(n));
    s.a = a;
    s.b = bv;
    if (!(classify(tagged(a), b) == *accepted_cell))
      throw std::logic_error("hydrogen_solve: quantized parameters outside the accepted cell");
    s.k = config.Z / (n * config.reduced_bohr_radius);
    s.energy = -1.0 / (static_cast<double>(n) * n);
    out.states.push_back(s);
  }
  return out;
}

double energy_unit_joules(double Z, double reduced_bohr_radius_m) {
  constexpr double e = 1.602176634e-19;
  constexpr double eps0 = 8.8541878128e-12;
  return Z * Z * e * e / (8.0 * std::numbers::pi * eps0 * reduced_bohr_radius_m);
}

double radial_shape(int n, int ell, double k, double r) {
  const double x = k * r;
  if (x > kUnderflowX) return 0.0;
  const SeriesEval m = kummer_m(ExactParam::integer(-n + ell + 1), ExactParam::integer(2 * ell + 2), 2.0 * x);
  return std::exp(-x) * std::pow(x, ell) * m.value;
}

RadialWavefunction hydrogen_radial(int n, int ell, const std::vector<double>& r_grid, double k) {
  require_quantum_numbers(n, ell);
  if (!(k > 0.0)) throw std::invalid_argument("hydrogen_radial: k must be positive");
  for (std::size_t i = 0; i < r_grid.size(); ++i)
    if (!(r_grid[i] > 0.0) || (i > 0 && !(r_grid[i] > r_grid[i - 1])))
      throw std::invalid_argument("hydrogen_radial: grid must be positive and ascending");

  RadialWavefunction w;
  w.n = n;
  w.ell = ell;
  w.k = k;
  const double norm2 = integrate_half_line([&](double r) {
    const double f = radial_shape(n, ell, k, r);
    return f * f * r * r;
  });
  w.normalization = 1.0 / std::sqrt(norm2);
  std::vector<double> xs{0.0}, ys{0.0};
  for (double r : r_grid) {
    const double R = w.normalization * radial_shape(n, ell, k, r);
    w.samples.emplace_back(r, R);
    xs.push_back(r);
    ys.push_back(R * R * r * r);
  }
  w.grid_norm = simpson(xs, ys);
  w.coarse_grid = std::fabs(w.grid_norm - 1.0) > 1e-8;
  return w;
}

double radial_overlap(int n1, int n2, int ell, double Z) {
  require_quantum_numbers(n1, ell);
  require_quantum_numbers(n2, ell);
  const double k1 = Z / n1, k2 = Z / n2;
  auto norm = [&](int n, double k) {
    return 1.0 / std::sqrt(integrate_half_line([&](double r) {
             const double f = radial_shape(n, ell, k, r);
             return f * f * r * r;
           }));
  };
  const double c = norm(n1, k1) * norm(n2, k2);
  return c * integrate_half_line([&](double r) { return radial_shape(n1, ell, k1, r) * radial_shape(n2, ell, k2, r) * r * r; });
}

int radial_node_count(int n, int ell, double k) {
  require_quantum_numbers(n, ell);
  // zeros of L_{n-l-1}^{(2l+1)}(x) lie below x = 4n + 2l + 2
  const double x_max = 4.0 * n + 2.0 * ell + 10.0;
  const int steps = 20000;
  int changes = 0;
  double prev = 0.0;
  for (int i = 1; i <= steps; ++i) {
    const double x = x_max * i / steps;
    const double v = radial_shape(n, ell, k, x / (2.0 * k));
    if (prev != 0.0 && v != 0.0 && (v > 0) != (prev > 0)) ++changes;
    if (v != 0.0) prev = v;
  }
  return changes;
}

double hydrogen_branch_equivalence(int n, int ell, const std::vector<double>& r_grid) {
  require_quantum_numbers(n, ell);
  const double k = 1.0 / n;
  const int n_r = n - ell - 1;
  const ExactParam a1 = ExactParam::integer(-n_r), b1 = ExactParam::integer(2 * ell + 2);
  const ExactParam a2 = ExactParam::integer(-1 - 2 * ell - n_r), b2 = ExactParam::integer(-2 * ell);

  auto chi1 = [&](double r) {
    const double z = 2 * k * r;
    if (z > 2 * kUnderflowX) return 0.0;
    return std::exp(-z / 2) * std::pow(z, ell + 1) * kummer_m(a1, b1, z).value;
  };
  auto chi2 = [&](double r) {
    const double z = 2 * k * r;
    // z^{b2/2} alone overflows near 0 while chi ~ z^{l+1}
    if (z > 2 * kUnderflowX || z < 1e-30) return 0.0;
    return std::exp(-z / 2) * std::pow(z, 0.5 * b2.value()) * m_tilde(a2, b2, z).value;
  };
  const double n1 = 1.0 / std::sqrt(integrate_half_line([&](double r) { return chi1(r) * chi1(r); }));
  const double n2 = 1.0 / std::sqrt(integrate_half_line([&](double r) { return chi2(r) * chi2(r); }));
  double worst = 0.0, peak = 0.0;
  for (double r : r_grid) {
    const double R1 = n1 * chi1(r) / r, R2 = n2 * chi2(r) / r;
    worst = std::max(worst, std::fabs(R1 - R2));
    peak = std::max(peak, std::fabs(R1));
  }
  return peak > 0.0 ? worst / peak : worst;
}

}  // namespace chf::physics
