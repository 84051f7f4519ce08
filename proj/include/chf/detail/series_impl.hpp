#pragma once

// Series kernels shared by the double path and the extended-precision path.
// Every kernel returns the value together with analytic first and second
// derivatives, accumulated term by term.

#include <algorithm>
#include <cstdint>
#include <optional>

#include "chf/config.hpp"
#include "chf/jet.hpp"
#include "chf/detail/real_ops.hpp"

namespace chf::detail {

template <class T>
struct SeriesJet {
  Jet<T> jet;
  T abs_error{};  // truncation + rounding estimate on jet.f
  T magnitude{};  // sum of |contributions| to jet.f
  int terms = 0;
  Termination termination = Termination::Converged;
};

/// Accumulates c z^p and c z^p ln z with exact derivative bookkeeping (z > 0).
template <class T>
class TermAccumulator {
 public:
  using O = RealOps<T>;

  explicit TermAccumulator(const T& z) : inv_z_(T(1) / z), log_z_(O::log(z)) {}

  const T& log_z() const { return log_z_; }

  // value = c z^p (already multiplied out)
  void add_power(const T& value, const T& p) {
    jet_.f += value;
    jet_.d1 += value * p * inv_z_;
    jet_.d2 += value * p * (p - T(1)) * inv_z_ * inv_z_;
    magnitude_ += O::abs(value);
  }

  // value = c z^p; contributes c z^p ln z
  void add_power_log(const T& value, const T& p) {
    jet_.f += value * log_z_;
    jet_.d1 += value * (p * log_z_ + T(1)) * inv_z_;
    jet_.d2 += value * (p * (p - T(1)) * log_z_ + T(2) * p - T(1)) * inv_z_ * inv_z_;
    magnitude_ += O::abs(value * log_z_);
  }

  const Jet<T>& jet() const { return jet_; }
  const T& magnitude() const { return magnitude_; }

 private:
  T inv_z_;
  T log_z_;
  Jet<T> jet_{};
  T magnitude_{};
};

/// Stopping rule for ascending series: past the term-ratio hump, two
/// consecutive terms (weighted for the second derivative) below
/// tolerance x running maximum of the partial sum.
template <class T>
class ConvergenceGate {
 public:
  using O = RealOps<T>;
  ConvergenceGate(double hump, double tol) : hump_(hump), tol_(tol) {}

  bool step(int s, const T& term_mag, const T& partial) {
    running_max_ = std::max(running_max_, O::to_double(O::abs(partial)));
    if (static_cast<double>(s) <= hump_) return false;
    const double w = O::to_double(term_mag) * (static_cast<double>(s) + 1.0) * (static_cast<double>(s) + 1.0);
    small_ = (w <= tol_ * running_max_) ? small_ + 1 : 0;
    return small_ >= 2;
  }

  double running_max() const { return running_max_; }

 private:
  double hump_;
  double tol_;
  double running_max_ = 0.0;
  int small_ = 0;
};

/// M(a, b, z) = sum_s (a)_s / (b)_s z^s / s!, any real z.
/// `degree` is m when a = -m (the series is a polynomial of degree m).
template <class T>
SeriesJet<T> m_power_series(const T& a, const T& b, const T& z, std::optional<std::int64_t> degree,
                            const EvalConfig& cfg) {
  using O = RealOps<T>;
  SeriesJet<T> out;
  T term(1);
  T f(1), s1(0), s2(0);
  T mag(1), weighted(2);
  int terms = 1;
  const double hump = std::fabs(O::to_double(a)) + std::fabs(O::to_double(b)) + std::fabs(O::to_double(z)) + 2.0;
  ConvergenceGate<T> gate(hump, cfg.tolerance);
  gate.step(0, term, f);

  Termination how = Termination::Converged;
  int s = 0;
  for (;; ++s) {
    if (degree && s == *degree) {
      how = Termination::PolynomialExact;
      break;
    }
    if (!degree && terms >= cfg.max_terms) {
      how = Termination::MaxTermsHit;
      break;
    }
    const T k(s);
    term *= (a + k) / (b + k) * z / (k + T(1));
    ++terms;
    f += term;
    s1 += (k + T(1)) * term;
    s2 += (k + T(1)) * k * term;
    const T at = O::abs(term);
    mag += at;
    weighted += (k + T(2)) * at;
    if (!degree && gate.step(s + 1, at, f)) break;
  }

  if (z == T(0)) {
    out.jet = {f, a / b, a * (a + T(1)) / (b * (b + T(1)))};
  } else {
    out.jet = {f, s1 / z, s2 / (z * z)};
  }

  T tail(0);
  if (how != Termination::PolynomialExact) {
    const T k(s + 1);
    const T next = O::abs(term * (a + k) / (b + k) * z / (k + T(1)));
    const T rho = O::abs((a + k + T(1)) / (b + k + T(1)) * z / (k + T(2)));
    tail = (rho < T(1)) ? next / (T(1) - rho) : next;
  }
  out.abs_error = tail + T(2) * O::eps() * weighted;
  out.magnitude = mag;
  out.terms = terms;
  out.termination = how;
  return out;
}

/// Integer-tag information carried into generic kernels.
struct ParamTags {
  std::optional<std::int64_t> a;          // a, when integral
  std::optional<std::int64_t> a_shifted;  // 1 + a - b, when integral
};

inline std::optional<std::int64_t> nonpositive_degree(std::optional<std::int64_t> tag) {
  if (tag && *tag <= 0) return -*tag;
  return std::nullopt;
}

/// U(a,b,z) = Gamma(1-b)/Gamma(1+a-b) M(a,b,z) + Gamma(b-1)/Gamma(a) z^{1-b} M(1+a-b,2-b,z),
/// b not an integer, z > 0. Reciprocal gammas vanish at poles.
template <class T>
SeriesJet<T> u_combination(const T& a, const T& b, const T& z, const ParamTags& tags, const EvalConfig& cfg) {
  using O = RealOps<T>;
  const T one(1);
  const T a_shift = one + a - b;
  const T c1 = tags.a_shifted && *tags.a_shifted <= 0 ? T(0) : O::gamma(one - b) * O::rgamma(a_shift);
  const T c2 = tags.a && *tags.a <= 0 ? T(0) : O::gamma(b - one) * O::rgamma(a);

  SeriesJet<T> out;
  out.jet = {};
  out.termination = Termination::Converged;
  bool all_poly = true;
  auto merge = [&](const SeriesJet<T>& part, const T& c) {
    out.jet += c * part.jet;
    out.abs_error += O::abs(c) * part.abs_error;
    out.magnitude += O::abs(c) * part.magnitude;
    out.terms += part.terms;
    if (part.termination == Termination::MaxTermsHit) out.termination = Termination::MaxTermsHit;
    if (part.termination != Termination::PolynomialExact) all_poly = false;
  };

  if (c1 != T(0)) {
    auto m1 = m_power_series(a, b, z, nonpositive_degree(tags.a), cfg);
    merge(m1, c1);
  }
  if (c2 != T(0)) {
    auto m2 = m_power_series(a_shift, T(2) - b, z, nonpositive_degree(tags.a_shifted), cfg);
    const T p = one - b;
    const T zp = O::pow(z, p);
    m2.jet = times_power(m2.jet, z, p, [](const T& x, const T& y) { return O::pow(x, y); });
    m2.abs_error *= zp;
    m2.magnitude *= zp;
    merge(m2, c2);
  }
  if (all_poly && out.termination != Termination::MaxTermsHit) out.termination = Termination::PolynomialExact;
  // gamma-ratio coefficients carry a few ulps each
  out.abs_error += T(8) * O::eps() * out.magnitude;
  return out;
}

/// U(-m, b, z) = (-1)^m sum_{s=0}^m C(m,s) (b+s)_{m-s} (-z)^s  (DLMF 13.2.7, valid for all b).
template <class T>
SeriesJet<T> u_polynomial_a(std::int64_t m, const T& b, const T& z) {
  using O = RealOps<T>;
  TermAccumulator<T> acc(z);
  T binom(1);
  T zs(1);
  T weighted(0);
  for (std::int64_t s = 0; s <= m; ++s) {
    T poch(1);
    for (std::int64_t k = 0; k < m - s; ++k) poch *= b + T(s + k);
    // (-1)^m (-z)^s = (-1)^{m+s} z^s
    const T sign = ((m + s) % 2 == 0) ? T(1) : T(-1);
    const T v = sign * binom * poch * zs;
    acc.add_power(v, T(s));
    weighted += O::abs(v) * T(m - s + 2);
    binom = binom * T(m - s) / T(s + 1);
    zs *= z;
  }
  SeriesJet<T> out;
  out.jet = acc.jet();
  out.magnitude = acc.magnitude();
  out.abs_error = T(2) * O::eps() * weighted;
  out.terms = static_cast<int>(m + 1);
  out.termination = Termination::PolynomialExact;
  return out;
}

/// U(a, a+n+1, z) = z^{-a} sum_{s=0}^n C(n,s) (a)_s z^{-s}  (DLMF 13.2.8, valid for all a).
template <class T>
SeriesJet<T> u_polynomial_shifted(const T& a, std::int64_t n, const T& z) {
  using O = RealOps<T>;
  TermAccumulator<T> acc(z);
  const T za = O::pow(z, -a);
  const T iz = T(1) / z;
  T binom(1);
  T poch(1);
  T zs = za;
  T weighted(0);
  for (std::int64_t s = 0; s <= n; ++s) {
    const T v = binom * poch * zs;
    acc.add_power(v, -a - T(s));
    weighted += O::abs(v) * T(s + 2);
    binom = binom * T(n - s) / T(s + 1);
    poch *= a + T(s);
    zs *= iz;
  }
  SeriesJet<T> out;
  out.jet = acc.jet();
  out.magnitude = acc.magnitude();
  out.abs_error = T(4) * O::eps() * weighted;
  out.terms = static_cast<int>(n + 1);
  out.termination = Termination::PolynomialExact;
  return out;
}

/// U(a, n+1, z) for a not in Z<=0 (DLMF 13.2.9):
///   (-1)^{n+1} / (n! Gamma(a-n)) sum_k (a)_k/((n+1)_k k!) z^k [ln z + psi(a+k) - psi(1+k) - psi(n+k+1)]
///   + 1/Gamma(a) sum_{k=1}^n (k-1)! (1-a+k)_{n-k} / (n-k)! z^{-k}.
/// The logarithmic sum is absent when a - n is in Z<=0 (`a_tag` decides it).
template <class T>
SeriesJet<T> u_log_series(const T& a, std::int64_t n, const T& z, std::optional<std::int64_t> a_tag,
                          const EvalConfig& cfg) {
  using O = RealOps<T>;
  TermAccumulator<T> acc(z);
  SeriesJet<T> out;
  T weighted(0);

  // finite negative-power part
  const T ra = O::rgamma(a);
  if (n >= 1 && ra != T(0)) {
    const T iz = T(1) / z;
    T zk(1);
    T fact_km1(1);  // (k-1)!
    for (std::int64_t k = 1; k <= n; ++k) {
      zk *= iz;
      T poch(1);
      for (std::int64_t j = 0; j < n - k; ++j) poch *= T(1) - a + T(k + j);
      T fact_nk(1);
      for (std::int64_t j = 2; j <= n - k; ++j) fact_nk *= T(j);
      const T v = ra * fact_km1 * poch / fact_nk * zk;
      acc.add_power(v, T(-k));
      weighted += O::abs(v) * T(2 * n + 4);
      fact_km1 *= T(k);
    }
  }
  int terms = static_cast<int>(n);

  const bool log_part_vanishes = a_tag && (*a_tag - n) <= 0;
  Termination how = Termination::Converged;
  if (!log_part_vanishes) {
    T n_fact(1);
    for (std::int64_t j = 2; j <= n; ++j) n_fact *= T(j);
    const T sign = ((n + 1) % 2 == 0) ? T(1) : T(-1);
    const T lead = sign / n_fact * O::rgamma(a - T(n));

    const T euler = O::euler();
    T psi_a = O::digamma(a);
    T harmonic_k(0);  // H_k
    T harmonic_nk(0);  // H_{n+k}
    for (std::int64_t j = 1; j <= n; ++j) harmonic_nk += T(1) / T(j);

    T c = lead;  // lead (a)_k / ((n+1)_k k!) z^k
    const double hump = std::fabs(O::to_double(a)) + static_cast<double>(n) + std::fabs(O::to_double(z)) + 3.0;
    ConvergenceGate<T> gate(hump, cfg.tolerance);
    const T log_mag = O::abs(acc.log_z()) + T(1);
    int k = 0;
    for (;; ++k) {
      // psi(1+k) = -gamma + H_k, psi(n+k+1) = -gamma + H_{n+k}
      const T dk = psi_a - (harmonic_k - euler) - (harmonic_nk - euler);
      acc.add_power_log(c, T(k));
      acc.add_power(c * dk, T(k));
      const T mag_k = O::abs(c) * (log_mag + O::abs(dk));
      weighted += mag_k * T(k + 6);
      ++terms;
      if (gate.step(k, mag_k / O::abs(lead == T(0) ? T(1) : lead), acc.jet().f / O::abs(lead == T(0) ? T(1) : lead)))
        break;
      if (terms >= cfg.max_terms) {
        how = Termination::MaxTermsHit;
        break;
      }
      const T kk(k);
      c *= (a + kk) / ((T(n + 1) + kk) * (kk + T(1))) * z;
      psi_a += T(1) / (a + kk);
      harmonic_k += T(1) / (kk + T(1));
      harmonic_nk += T(1) / (T(n + 1) + kk);
    }
    const T kk(k + 1);
    const T next = O::abs(c * (a + kk) / ((T(n + 1) + kk) * (kk + T(1))) * z) * (log_mag + O::abs(psi_a) + T(2) * O::log(T(n + 2) + kk));
    out.abs_error += next * T(2);
  } else {
    how = Termination::PolynomialExact;
  }

  out.jet = acc.jet();
  out.magnitude = acc.magnitude();
  out.abs_error += T(4) * O::eps() * weighted;
  out.terms = terms;
  out.termination = how;
  return out;
}

/// Large-z expansion U ~ z^{-a} sum_s (a)_s (1+a-b)_s / s! (-z)^{-s}, truncated
/// before the smallest term. Returns nullopt if the smallest term never drops
/// below the tolerance.
template <class T>
std::optional<SeriesJet<T>> u_asymptotic(const T& a, const T& b, const T& z, const EvalConfig& cfg) {
  using O = RealOps<T>;
  TermAccumulator<T> acc(z);
  const T za = O::pow(z, -a);
  const T ap = T(1) + a - b;
  T term = za;
  T weighted(0);
  T prev_mag = O::abs(term);
  for (int s = 0; s < cfg.max_terms; ++s) {
    acc.add_power(term, -a - T(s));
    weighted += O::abs(term) * T(s + 2);
    const T ks(s);
    const T next = term * (a + ks) * (ap + ks) / (ks + T(1)) * (T(-1) / z);
    const T next_mag = O::abs(next);
    if (next == T(0)) {
      SeriesJet<T> out;
      out.jet = acc.jet();
      out.magnitude = acc.magnitude();
      out.abs_error = T(4) * O::eps() * weighted;
      out.terms = s + 1;
      out.termination = Termination::PolynomialExact;
      return out;
    }
    const double scale = O::to_double(O::abs(acc.jet().f));
    // derivative jets need a couple of extra orders beyond the value
    if (O::to_double(next_mag) * (static_cast<double>(s) + 2.0) * (static_cast<double>(s) + 2.0) <=
        cfg.tolerance * 1e-2 * scale) {
      SeriesJet<T> out;
      out.jet = acc.jet();
      out.magnitude = acc.magnitude();
      out.abs_error = next_mag + T(4) * O::eps() * weighted;
      out.terms = s + 1;
      out.termination = Termination::Converged;
      return out;
    }
    if (s > 2 && next_mag > prev_mag) return std::nullopt;
    prev_mag = next_mag;
    term = next;
  }
  return std::nullopt;
}

}  // namespace chf::detail
