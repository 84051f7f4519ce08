#pragma once

#include <cstdint>
#include <vector>

#include "chf/config.hpp"
#include "chf/exact_param.hpp"

namespace chf::simd {

enum class SimdLevel { Scalar, AVX2, NEON };

const char* to_string(SimdLevel level);

/// Best level the running CPU and this build both support.
SimdLevel detected_level();

/// detected_level(), lowered by CHF_SIMD=scalar|avx2|neon when set.
/// A request above what is available falls back to detected_level().
SimdLevel active_level();

bool level_available(SimdLevel level);

/// M(a, b, z_i) for every grid point.
struct GridEval {
  std::vector<double> values;
  std::vector<std::uint8_t> fallback;  // 1 where the lane was redone by kummer_m
  std::size_t fallback_count = 0;
  SimdLevel level = SimdLevel::Scalar;
};

/// Lanes are summed by the selected kernel. A lane goes to the scalar
/// kummer_m path when z < -1 (non-polynomial), when rounding in the partial
/// sums could exceed the tolerance, or when the term cap is reached. Throws
/// UndefinedFunction for b in Z<=0 and std::invalid_argument for an
/// unavailable level.
GridEval kummer_m_grid(const ExactParam& a, const ExactParam& b, const std::vector<double>& zs,
                       const EvalConfig& cfg = {}, SimdLevel level = active_level());

}  // namespace chf::simd
