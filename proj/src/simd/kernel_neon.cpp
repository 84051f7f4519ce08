#include <arm_neon.h>

#include "kernels.hpp"

namespace chf::simd::detail {

// Two-lane twin of the AVX2 kernel.
void m_kernel_neon(const KernelArgs& k, const double* z, double* sum, double* max_term, std::uint8_t* status,
                   std::size_t n) {
  const float64x2_t tol = vdupq_n_f64(k.stop);
  const float64x2_t half = vdupq_n_f64(0.5);
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t zv = vld1q_f64(z + i);
    float64x2_t t = vdupq_n_f64(1.0), s = t, mx = t;
    uint64x2_t done = vdupq_n_u64(0);
    for (int j = 0; j + 1 < k.n_ratio; ++j) {
      const float64x2_t tn = vmulq_f64(vmulq_f64(t, vdupq_n_f64(k.ratio[j])), zv);
      const float64x2_t sn = vaddq_f64(s, tn);
      const float64x2_t at = vabsq_f64(tn);
      const float64x2_t mxn = vmaxq_f64(at, mx);
      t = vbslq_f64(done, t, tn);
      s = vbslq_f64(done, s, sn);
      mx = vbslq_f64(done, mx, mxn);
      const uint64x2_t small = vcleq_f64(at, vmulq_f64(tol, vabsq_f64(sn)));
      const uint64x2_t shrinking = vcltq_f64(vabsq_f64(vmulq_f64(vdupq_n_f64(k.ratio[j + 1]), zv)), half);
      const uint64x2_t stop = vorrq_u64(vandq_u64(small, shrinking), vceqq_f64(tn, zero));
      done = vorrq_u64(done, stop);
      if (vgetq_lane_u64(done, 0) && vgetq_lane_u64(done, 1)) break;
    }
    vst1q_f64(sum + i, s);
    vst1q_f64(max_term + i, mx);
    status[i] = vgetq_lane_u64(done, 0) ? kLaneConverged : kLaneCapped;
    status[i + 1] = vgetq_lane_u64(done, 1) ? kLaneConverged : kLaneCapped;
  }
  if (i < n) m_kernel_scalar(k, z + i, sum + i, max_term + i, status + i, n - i);
}

}  // namespace chf::simd::detail
