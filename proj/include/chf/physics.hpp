#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chf/case_id.hpp"
#include "chf/classifier.hpp"
#include "chf/config.hpp"

namespace chf::physics {

/// Hydrogenic bound-state problem. Lengths in units of reduced_bohr_radius.
struct HydrogenicConfig {
  double Z = 1.0;       // nuclear charge, any positive real
  int ell = 0;          // orbital quantum number
  int branch = 1;       // 1: b = 2(l+1); 2: b = -2l
  double reduced_bohr_radius = 1.0;
};

/// Kummer parameters of a branch for nu = Z/(k a0):
/// branch 1: a = l + 1 - nu, b = 2(l+1); branch 2: a = -l - nu, b = -2l.
std::pair<double, int> branch_parameters(int branch, int ell, double nu);

/// Coulomb strength 2Z/(c k a0) with c = 2.
double coulomb_strength(double Z, double k, double reduced_bohr_radius);

enum class Verdict { Accepted, Rejected, SameAsAccepted };

enum class RejectReason {
  None,
  DivergesAtInfinity,    // e^{z/2} growth of chi
  LogTerm,               // ln z in the solution
  SmallZDivergence,      // chi does not vanish as z -> 0
  ProportionalToAccepted // U duplicates the accepted solution
};

const char* to_string(Verdict v);
const char* to_string(RejectReason r);

/// One examined (cell, solution) combination.
struct TraceEntry {
  CaseId id;
  SolutionKind solution = SolutionKind::KummerM;
  Verdict verdict = Verdict::Rejected;
  RejectReason reason = RejectReason::None;
  double a = 0.0;  // representative parameters used for the check
  double b = 0.0;
  std::string detail;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct BoundState {
  int n = 0;    // principal quantum number
  int ell = 0;
  int n_r = 0;  // radial quantum number
  double energy = 0.0;  // units of Z^2 e^2 / (8 pi eps0 a0)
  double k = 0.0;       // k_n = Z / (n a0)
  double a = 0.0;       // Kummer a of the accepted cell
  double b = 0.0;

  friend bool operator==(const BoundState&, const BoundState&) = default;
};

struct BoundStateSpectrum {
  HydrogenicConfig config;
  std::vector<BoundState> states;
  std::vector<TraceEntry> case_trace;
};

/// Walks the column of the labyrinth fixed by the branch and keeps the
/// normalizable, origin-regular solutions. Throws std::invalid_argument for
/// l < 0, Z <= 0, a branch other than 1 or 2, or n_max < l + 1.
BoundStateSpectrum hydrogen_solve(const HydrogenicConfig& config, int n_max);

/// E_n in joules for the Rydberg-type unit Z^2 e^2 / (8 pi eps0 a0).
double energy_unit_joules(double Z, double reduced_bohr_radius_m = 5.29177210903e-11);

struct RadialWavefunction {
  int n = 0;
  int ell = 0;
  double k = 0.0;
  std::vector<std::pair<double, double>> samples;  // (r, R(r))
  double normalization = 0.0;     // N in R = N e^{-kr} (kr)^l M(-n+l+1, 2l+2, 2kr)
  double grid_norm = 0.0;         // composite Simpson estimate of int R^2 r^2 dr on the samples
  bool coarse_grid = false;       // grid_norm misses 1 by more than 1e-8
};

/// Unnormalized e^{-kr} (kr)^l M(-n+l+1, 2l+2, 2kr).
double radial_shape(int n, int ell, double k, double r);

/// Samples on a positive ascending grid; N from adaptive quadrature on (0, inf).
RadialWavefunction hydrogen_radial(int n, int ell, const std::vector<double>& r_grid, double k);

/// int_0^inf f(r) g(r) r^2 dr for two normalized radial functions of the same l.
double radial_overlap(int n1, int n2, int ell, double Z = 1.0);

/// Sign changes of R on (0, inf), located on a dense grid.
int radial_node_count(int n, int ell, double k);

/// Builds the branch-2 wavefunction through M~(a2, b2, z) and compares it
/// with the branch-1 one after normalizing both: max |R1 - R2| / max |R1|.
double hydrogen_branch_equivalence(int n, int ell, const std::vector<double>& r_grid);

/// Cutoff Coulomb potential (Z = 1, l = 0, lengths in a0, energies in
/// e^2/(8 pi eps0 a0)): -2/r0 inside r0, -2/r outside.
struct CutoffConfig {
  double r0 = 0.1;
  double e_lo = -1.0;  // energy bracket
  double e_hi = -0.01;
  int points_per_rydberg = 200;
  double rel_tol = 1e-10;
  EvalConfig eval;
};

struct CutoffState {
  double energy = 0.0;
  double k = 0.0;
  double a = 0.0;               // 1 - 1/k
  CaseId case_id;               // classification of (a, 2)
  double matching_residual = 0.0;  // |chi_I' chi_II - chi_I chi_II'| / (|chi_I' chi_II| + |chi_I chi_II'|)
  double inner_scale = 0.0;     // region-I amplitude making chi continuous
};

/// chi and dchi/dr of a cutoff eigenfunction (continuous across r0).
struct ChiValue {
  double chi = 0.0;
  double dchi = 0.0;
};

ChiValue cutoff_chi_inner(const CutoffState& s, double r0, double r);
ChiValue cutoff_chi_outer(const CutoffState& s, double r, const EvalConfig& cfg = {});

/// Roots of the matching condition in [e_lo, e_hi], ascending. Throws
/// std::runtime_error when the bracket holds no root; NonConvergence from U
/// propagates.
std::vector<CutoffState> cutoff_coulomb_solve(const CutoffConfig& cfg);

}  // namespace chf::physics
