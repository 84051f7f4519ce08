#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chf/case_id.hpp"
#include "chf/config.hpp"
#include "chf/exact_param.hpp"
#include "chf/jet.hpp"
#include "chf/tricomi.hpp"

namespace chf {

enum class SolutionKind { KummerM, MTilde, TricomiU, LogSecond4B, LogSecond4C };

const char* to_string(SolutionKind k);
std::optional<SolutionKind> parse_solution_kind(const std::string& text);

struct SolutionDescriptor {
  SolutionKind kind = SolutionKind::KummerM;
  bool has_log_term = false;
  std::optional<SolutionKind> proportional_to;

  friend bool operator==(const SolutionDescriptor&, const SolutionDescriptor&) = default;
};

struct SolutionPair {
  SolutionDescriptor first;
  SolutionDescriptor second;

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

struct SolutionBasis {
  SolutionDescriptor first;
  SolutionDescriptor second;
  CaseId case_id;
  std::vector<SolutionPair> alternatives;

  friend bool operator==(const SolutionBasis&, const SolutionBasis&) = default;
};

struct PreferenceConfig {
  /// Offer the b = 1 alternatives in which M~ stands in for M.
  bool include_b1_alternatives = true;
};

/// Cell of the labyrinth for tagged parameters. Total: never returns a
/// cell that does not occur.
CaseId classify(const ExactParam& a, const ExactParam& b);

/// Preferred pair and every other valid pair for (a, b) in `id`.
/// Throws std::invalid_argument when `id` is not classify(a, b).
SolutionBasis basis_for(const CaseId& id, const ExactParam& a, const ExactParam& b, const PreferenceConfig& prefs = {});

/// Convenience: basis_for(classify(a, b), a, b).
SolutionBasis basis_for(const ExactParam& a, const ExactParam& b, const PreferenceConfig& prefs = {});

struct LabyrinthCell {
  CaseId id;
  bool occurs = false;
  std::vector<SolutionPair> menu;  // ordered, preferred first; empty for DNO
  bool log_marked = false;         // one of the solutions carries ln z
  bool nonstandard = false;        // one solution is not M, M~ or U
  std::optional<USolutionRecipe> u_recipe;
  std::vector<std::string> formula_refs;  // DLMF formula numbers attached to the cell
};

/// All 18 cells in row-major order 1.A, 1.B, ..., 6.C.
std::vector<LabyrinthCell> enumerate_labyrinth();

/// Value and derivatives of one solution at z (z > 0 unless the kind is M).
Jet<double> evaluate_solution(const SolutionDescriptor& d, const ExactParam& a, const ExactParam& b, double z,
                              const EvalConfig& cfg = {});

}  // namespace chf
