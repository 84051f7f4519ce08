#pragma once

#include <cstdint>

namespace chf {

struct EvalConfig {
  double tolerance = 1e-12;
  int max_terms = 2000;

  /// Defaults overridden by CHF_TOL and CHF_MAX_TERMS when set.
  static EvalConfig from_env();
};

enum class Termination { Converged, PolynomialExact, MaxTermsHit };

const char* to_string(Termination t);

enum Warning : std::uint32_t {
  kNoWarning = 0,
  kCancellation = 1u << 0,        // branch magnitudes far above the result
  kExtendedPrecision = 1u << 1,   // value was recomputed in software floating point
};

/// Value of a series-based evaluation with its truncation bookkeeping.
struct SeriesEval {
  double value = 0.0;
  double abs_error_est = 0.0;
  int terms_used = 0;
  Termination terminated = Termination::Converged;
  std::uint32_t warnings = kNoWarning;

  friend bool operator==(const SeriesEval&, const SeriesEval&) = default;
};

}  // namespace chf
