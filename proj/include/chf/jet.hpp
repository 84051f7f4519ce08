#pragma once

namespace chf {

/// Value with first and second z-derivatives.
template <class T>
struct Jet {
  T f{};
  T d1{};
  T d2{};

  Jet& operator+=(const Jet& o) {
    f += o.f;
    d1 += o.d1;
    d2 += o.d2;
    return *this;
  }
  friend Jet operator+(Jet x, const Jet& y) { return x += y; }
  friend Jet operator*(const T& c, Jet x) {
    x.f *= c;
    x.d1 *= c;
    x.d2 *= c;
    return x;
  }
};

/// z^p * g(z) with product-rule derivatives; z > 0.
template <class T, class Pow>
Jet<T> times_power(const Jet<T>& g, const T& z, const T& p, Pow&& pow_fn) {
  const T zp = pow_fn(z, p);
  const T iz = T(1) / z;
  Jet<T> r;
  r.f = zp * g.f;
  r.d1 = zp * (g.d1 + p * g.f * iz);
  r.d2 = zp * (g.d2 + T(2) * p * g.d1 * iz + p * (p - T(1)) * g.f * iz * iz);
  return r;
}

/// e^z * g(-z) given the jet h of g evaluated at -z.
template <class T, class Exp>
Jet<T> exp_times_reflected(const Jet<T>& h, const T& z, Exp&& exp_fn) {
  const T e = exp_fn(z);
  return {e * h.f, e * (h.f - h.d1), e * (h.f - T(2) * h.d1 + h.d2)};
}

}  // namespace chf
