#include "chf/simd/batch.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>

#include "chf/errors.hpp"
#include "chf/kummer.hpp"
#include "kernels.hpp"

namespace chf::simd {

namespace {

constexpr double kRoundingSlack = 16.0 * std::numeric_limits<double>::epsilon();

bool cpu_has_avx2() {
#if defined(CHF_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::vector<double> ratios(const ExactParam& a, const ExactParam& b, int max_terms) {
  std::vector<double> r(static_cast<std::size_t>(max_terms) + 1);
  const double av = a.value(), bv = b.value();
  for (int s = 0; s <= max_terms; ++s) r[s] = (av + s) / ((bv + s) * (s + 1.0));
  // exact termination for a tagged in Z<=0
  if (a.is_nonpositive_integer() && -*a.integer_tag() <= max_terms) r[-*a.integer_tag()] = 0.0;
  return r;
}

}  // namespace

const char* to_string(SimdLevel level) {
  switch (level) {
    case SimdLevel::Scalar:
      return "scalar";
    case SimdLevel::AVX2:
      return "avx2";
    case SimdLevel::NEON:
      return "neon";
  }
  return "?";
}

bool level_available(SimdLevel level) {
  switch (level) {
    case SimdLevel::Scalar:
      return true;
    case SimdLevel::AVX2:
      return cpu_has_avx2();
    case SimdLevel::NEON:
#if defined(CHF_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

SimdLevel detected_level() {
  if (level_available(SimdLevel::AVX2)) return SimdLevel::AVX2;
  if (level_available(SimdLevel::NEON)) return SimdLevel::NEON;
  return SimdLevel::Scalar;
}

SimdLevel active_level() {
  const char* env = std::getenv("CHF_SIMD");
  if (!env || !*env) return detected_level();
  const std::string v(env);
  SimdLevel want = detected_level();
  if (v == "scalar") want = SimdLevel::Scalar;
  else if (v == "avx2") want = SimdLevel::AVX2;
  else if (v == "neon") want = SimdLevel::NEON;
  return level_available(want) ? want : detected_level();
}

GridEval kummer_m_grid(const ExactParam& a, const ExactParam& b, const std::vector<double>& zs, const EvalConfig& cfg,
                       SimdLevel level) {
  if (b.is_nonpositive_integer())
    throw UndefinedFunction("M(a,b,z) is not defined for b a non-positive integer (b = " + b.to_string() + ")");
  if (!level_available(level)) throw std::invalid_argument(std::string("SIMD level unavailable: ") + to_string(level));

  const std::size_t n = zs.size();
  GridEval out;
  out.level = level;
  out.values.resize(n);
  out.fallback.assign(n, 0);
  if (n == 0) return out;

  const std::vector<double> r = ratios(a, b, cfg.max_terms);
  // lanes sum to unit roundoff; the tolerance only decides fallbacks
  const detail::KernelArgs args{r.data(), static_cast<int>(r.size()), 0.5 * std::numeric_limits<double>::epsilon()};
  std::vector<double> max_term(n);
  std::vector<std::uint8_t> status(n);
  switch (level) {
    case SimdLevel::Scalar:
      detail::m_kernel_scalar(args, zs.data(), out.values.data(), max_term.data(), status.data(), n);
      break;
    case SimdLevel::AVX2:
#if defined(CHF_HAVE_AVX2)
      detail::m_kernel_avx2(args, zs.data(), out.values.data(), max_term.data(), status.data(), n);
#endif
      break;
    case SimdLevel::NEON:
#if defined(CHF_HAVE_NEON)
      detail::m_kernel_neon(args, zs.data(), out.values.data(), max_term.data(), status.data(), n);
#endif
      break;
  }

  const bool polynomial = a.is_nonpositive_integer();
  for (std::size_t i = 0; i < n; ++i) {
    const double v = out.values[i];
    const bool redo = !std::isfinite(zs[i]) || (zs[i] < -1.0 && !polynomial) || status[i] != detail::kLaneConverged ||
                      !std::isfinite(v) || kRoundingSlack * max_term[i] > cfg.tolerance * std::fabs(v);
    if (!redo) continue;
    out.values[i] = kummer_m(a, b, zs[i], cfg).value;
    out.fallback[i] = 1;
    ++out.fallback_count;
  }
  return out;
}

}  // namespace chf::simd
