#include <cmath>
#include <stdexcept>

#include "chf/physics.hpp"
#include "chf/tricomi.hpp"

namespace chf::physics {

namespace {

// Region I: chi'' + q^2 chi = 0 with q^2 = 2/r0 - k^2, chi(0) = 0, chi'(0) = 1.
ChiValue inner(double k, double r0, double r) {
  const double q2 = 2.0 / r0 - k * k;
  if (q2 > 0.0) {
    const double q = std::sqrt(q2);
    return {std::sin(q * r) / q, std::cos(q * r)};
  }
  if (q2 < 0.0) {
    const double p = std::sqrt(-q2);
    return {std::sinh(p * r) / p, std::cosh(p * r)};
  }
  return {r, 1.0};
}

// Region II: chi = rho e^{-rho} U(a, 2, 2 rho), rho = k r, a = 1 - 1/k.
ChiValue outer(double k, double r, const EvalConfig& cfg) {
  const double rho = k * r;
  const Jet<double> u = tricomi_u_jet(ExactParam(1.0 - 1.0 / k), ExactParam::integer(2), 2.0 * rho, cfg);
  const double e = std::exp(-rho);
  return {rho * e * u.f, k * e * ((1.0 - rho) * u.f + 2.0 * rho * u.d1)};
}

double mismatch(double energy, double r0, const EvalConfig& cfg, double* relative = nullptr) {
  const double k = std::sqrt(-energy);
  const ChiValue i = inner(k, r0, r0);
  const ChiValue o = outer(k, r0, cfg);
  const double g = i.dchi * o.chi - i.chi * o.dchi;
  if (relative) *relative = std::fabs(g) / (std::fabs(i.dchi * o.chi) + std::fabs(i.chi * o.dchi));
  return g;
}

}  // namespace

ChiValue cutoff_chi_inner(const CutoffState& s, double r0, double r) {
  const ChiValue v = inner(s.k, r0, r);
  return {s.inner_scale * v.chi, s.inner_scale * v.dchi};
}

ChiValue cutoff_chi_outer(const CutoffState& s, double r, const EvalConfig& cfg) { return outer(s.k, r, cfg); }

std::vector<CutoffState> cutoff_coulomb_solve(const CutoffConfig& cfg) {
  if (!(cfg.r0 > 0.0)) throw std::invalid_argument("cutoff_coulomb_solve: r0 must be positive");
  if (!(cfg.e_lo < cfg.e_hi) || !(cfg.e_hi < 0.0))
    throw std::invalid_argument("cutoff_coulomb_solve: need e_lo < e_hi < 0 (bound states)");
  if (cfg.points_per_rydberg < 1) throw std::invalid_argument("cutoff_coulomb_solve: points_per_rydberg >= 1");

  const int cells = std::max(1, static_cast<int>(std::ceil((cfg.e_hi - cfg.e_lo) * cfg.points_per_rydberg)));
  std::vector<double> grid(cells + 1);
  for (int i = 0; i <= cells; ++i) grid[i] = cfg.e_lo + (cfg.e_hi - cfg.e_lo) * i / cells;

  std::vector<double> roots;
  double e0 = grid[0];
  double g0 = mismatch(e0, cfg.r0, cfg.eval);
  for (int i = 1; i <= cells; ++i) {
    const double e1 = grid[i];
    const double g1 = mismatch(e1, cfg.r0, cfg.eval);
    if (g0 == 0.0) roots.push_back(e0);
    if (g0 != 0.0 && g1 != 0.0 && (g0 > 0) != (g1 > 0)) {
      double lo = e0, hi = e1, glo = g0;
      while (hi - lo > cfg.rel_tol * std::fabs(0.5 * (lo + hi))) {
        const double mid = 0.5 * (lo + hi);
        const double gm = mismatch(mid, cfg.r0, cfg.eval);
        if (gm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((gm > 0) == (glo > 0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    e0 = e1;
    g0 = g1;
  }
  if (g0 == 0.0) roots.push_back(e0);
  if (roots.empty()) throw std::runtime_error("cutoff_coulomb_solve: no eigenvalue in the energy bracket");

  std::vector<CutoffState> out;
  for (double e : roots) {
    CutoffState s;
    s.energy = e;
    s.k = std::sqrt(-e);
    s.a = 1.0 - 1.0 / s.k;
    s.case_id = classify(ExactParam(s.a), ExactParam::integer(2));
    mismatch(e, cfg.r0, cfg.eval, &s.matching_residual);
    const ChiValue i = inner(s.k, cfg.r0, cfg.r0);
    const ChiValue o = outer(s.k, cfg.r0, cfg.eval);
    s.inner_scale = o.chi / i.chi;
    out.push_back(s);
  }
  return out;
}

}  // namespace chf::physics
