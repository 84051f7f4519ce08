#include <immintrin.h>

#include "kernels.hpp"

namespace chf::simd::detail {

// Same operation order as the scalar kernel; finished lanes are frozen by blending.
void m_kernel_avx2(const KernelArgs& k, const double* z, double* sum, double* max_term, std::uint8_t* status,
                   std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  const __m256d tol = _mm256_set1_pd(k.stop);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d zv = _mm256_loadu_pd(z + i);
    __m256d t = _mm256_set1_pd(1.0), s = t, mx = t;
    __m256d done = _mm256_setzero_pd();
    for (int j = 0; j + 1 < k.n_ratio; ++j) {
      const __m256d tn = _mm256_mul_pd(_mm256_mul_pd(t, _mm256_set1_pd(k.ratio[j])), zv);
      const __m256d sn = _mm256_add_pd(s, tn);
      const __m256d at = _mm256_andnot_pd(sign, tn);
      const __m256d mxn = _mm256_max_pd(at, mx);
      t = _mm256_blendv_pd(tn, t, done);
      s = _mm256_blendv_pd(sn, s, done);
      mx = _mm256_blendv_pd(mxn, mx, done);
      const __m256d small = _mm256_cmp_pd(at, _mm256_mul_pd(tol, _mm256_andnot_pd(sign, sn)), _CMP_LE_OQ);
      const __m256d next = _mm256_andnot_pd(sign, _mm256_mul_pd(_mm256_set1_pd(k.ratio[j + 1]), zv));
      const __m256d shrinking = _mm256_cmp_pd(next, half, _CMP_LT_OQ);
      const __m256d stop = _mm256_or_pd(_mm256_and_pd(small, shrinking), _mm256_cmp_pd(tn, zero, _CMP_EQ_OQ));
      done = _mm256_or_pd(done, stop);
      if (_mm256_movemask_pd(done) == 0xF) break;
    }
    _mm256_storeu_pd(sum + i, s);
    _mm256_storeu_pd(max_term + i, mx);
    const int m = _mm256_movemask_pd(done);
    for (int l = 0; l < 4; ++l) status[i + l] = (m >> l) & 1 ? kLaneConverged : kLaneCapped;
  }
  if (i < n) m_kernel_scalar(k, z + i, sum + i, max_term + i, status + i, n - i);
}

}  // namespace chf::simd::detail
