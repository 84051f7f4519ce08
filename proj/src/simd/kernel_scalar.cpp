#include <cmath>

#include "kernels.hpp"

namespace chf::simd::detail {

void m_kernel_scalar(const KernelArgs& k, const double* z, double* sum, double* max_term, std::uint8_t* status,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double zi = z[i];
    double t = 1.0, s = 1.0, mx = 1.0;
    std::uint8_t st = kLaneCapped;
    for (int j = 0; j + 1 < k.n_ratio; ++j) {
      t = t * k.ratio[j] * zi;
      s = s + t;
      mx = std::fmax(mx, std::fabs(t));
      const bool small = std::fabs(t) <= k.stop * std::fabs(s);
      const bool shrinking = std::fabs(k.ratio[j + 1] * zi) < 0.5;
      if ((small && shrinking) || t == 0.0) {
        st = kLaneConverged;
        break;
      }
    }
    sum[i] = s;
    max_term[i] = mx;
    status[i] = st;
  }
}

}  // namespace chf::simd::detail
