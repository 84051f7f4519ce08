#pragma once

#include <cstdint>
#include <string>

#include "chf/case_id.hpp"
#include "chf/config.hpp"
#include "chf/exact_param.hpp"
#include "chf/jet.hpp"

namespace chf {

enum class URoute {
  NonIntegerBCombination,  // Gamma-weighted M and z^{1-b} M combination
  IntegerBLogSeries,       // DLMF 13.2.9 (b > 0) or 13.2.11 + 13.2.9 (b <= 0)
  PolynomialProportional,  // DLMF 13.2.7 (a in Z<=0) or 13.2.8 (1+a-b in Z<=0)
  EpsilonLimit,            // extrapolated combination at b +- eps
  LargeZAsymptotic,        // z^{-a} 2F0 expansion, truncated at convergence
};

const char* to_string(URoute r);

/// How U is obtained in one labyrinth cell.
struct USolutionRecipe {
  URoute route = URoute::NonIntegerBCombination;
  std::string dlmf_id;
  bool has_log_term = false;

  friend bool operator==(const USolutionRecipe&, const USolutionRecipe&) = default;
};

/// Recipe for U in a realizable cell; throws std::invalid_argument for DNO cells.
USolutionRecipe tricomi_recipe(const CaseId& id);

struct UOptions {
  bool allow_asymptotic = true;  // large-z expansion when it reaches the tolerance
  bool allow_extended = true;    // recompute in extended precision on cancellation
};

/// Full result of a U evaluation.
struct UEvaluation {
  Jet<double> jet;
  SeriesEval info;
  URoute route = URoute::NonIntegerBCombination;
  std::string formula;  // which closed form was summed
};

/// Tricomi's U(a, b, z) on the principal branch, z > 0.
///
/// Dispatch: a in Z<=0 -> 13.2.7; integer b -> 13.2.9 (through 13.2.11 for
/// b <= 0); non-integer b with 1+a-b in Z<=0 -> 13.2.8; otherwise the
/// Gamma-weighted combination of M and z^{1-b} M. Large z uses the asymptotic expansion when it converges.
/// Cancellation beyond the tolerance triggers an extended-precision rerun.
/// Throws DomainError for z <= 0, NonConvergence when no route converges.
SeriesEval tricomi_u(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg = {});
Jet<double> tricomi_u_jet(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg = {});
UEvaluation tricomi_u_detail(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg = {},
                             const UOptions& opts = {});

/// Raw combination formula in double precision; b must not be tagged integer.
/// Sets kCancellation when the branch magnitudes exceed 1e6 x |result|.
SeriesEval tricomi_u_noninteger_b(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg = {});

/// U(a, b_int, z) as the Richardson-extrapolated symmetric limit of the
/// combination formula at b_int +- eps, eps in {1e-3, 5e-4, 2.5e-4}, in
/// extended precision. Throws NonConvergence when the extrapolants disagree.
SeriesEval tricomi_u_epsilon_limit(const ExactParam& a, std::int64_t b_int, double z, const EvalConfig& cfg = {});

/// Decomposition of a logarithmic second solution:
/// value = finite + log_coefficient * ln z + regular + tail.
struct LogSeriesParts {
  double finite = 0.0;           // negative powers of z
  double log_coefficient = 0.0;  // multiplies ln z
  double regular = 0.0;          // psi-weighted part of the log-bearing sum
  double tail = 0.0;             // infinite series
  double value = 0.0;
};

/// Non-standard second solution for a = -m, b = -n, m >= n + 1 (z > 0).
SeriesEval second_solution_case4B(std::int64_t m, std::int64_t n, double z, const EvalConfig& cfg = {});
Jet<double> second_solution_case4B_jet(std::int64_t m, std::int64_t n, double z, const EvalConfig& cfg = {});
LogSeriesParts second_solution_case4B_parts(std::int64_t m, std::int64_t n, double z, const EvalConfig& cfg = {});

/// Non-standard second solution for a = -m, b = 1 + n (z > 0).
SeriesEval second_solution_case4C(std::int64_t m, std::int64_t n, double z, const EvalConfig& cfg = {});
Jet<double> second_solution_case4C_jet(std::int64_t m, std::int64_t n, double z, const EvalConfig& cfg = {});
LogSeriesParts second_solution_case4C_parts(std::int64_t m, std::int64_t n, double z, const EvalConfig& cfg = {});

/// |U(a,b,z) - z^{1-b} U(1+a-b, 2-b, z)| / |U(a,b,z)|.
double kummer_transform_second_check(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg = {});

}  // namespace chf
