#pragma once

#include <cstddef>
#include <cstdint>

namespace chf::simd::detail {

// ratio[s] = (a+s) / ((b+s)(s+1)); term_{s+1} = term_s * ratio[s] * z.
// A lane stops when |term| <= stop |sum| and |ratio[s+1] z| < 1/2, or term == 0.
struct KernelArgs {
  const double* ratio;
  int n_ratio;
  double stop;
};

enum LaneStatus : std::uint8_t { kLaneConverged = 0, kLaneCapped = 1 };

void m_kernel_scalar(const KernelArgs& k, const double* z, double* sum, double* max_term, std::uint8_t* status,
                     std::size_t n);
void m_kernel_avx2(const KernelArgs& k, const double* z, double* sum, double* max_term, std::uint8_t* status,
                   std::size_t n);
void m_kernel_neon(const KernelArgs& k, const double* z, double* sum, double* max_term, std::uint8_t* status,
                   std::size_t n);

}  // namespace chf::simd::detail
