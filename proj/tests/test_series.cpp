#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "chf/errors.hpp"
#include "chf/kummer.hpp"
#include "doctest.h"

using namespace chf;

namespace {

double rel(double x, double ref) { return std::fabs(x - ref) / std::fabs(ref); }

double scaled_residual(const Jet<double>& w, double a, double b, double z) {
  const double r = z * w.d2 + (b - z) * w.d1 - a * w.f;
  const double scale = std::max({std::fabs(w.f), std::fabs(w.d1), std::fabs(w.d2)}) * (1.0 + std::fabs(z));
  return std::fabs(r) / scale;
}

// Exact value of the terminating series for a = -m, rational b and z.
boost::multiprecision::cpp_rational exact_polynomial(int m, boost::multiprecision::cpp_rational b,
                                                     boost::multiprecision::cpp_rational z) {
  using Q = boost::multiprecision::cpp_rational;
  // Horner on the nested form 1 + c1 z (1 + c2 z (1 + ...)), c_s = (a+s-1)/((b+s-1) s)
  Q acc = 1;
  for (int s = m; s >= 1; --s) acc = 1 + Q(-m + s - 1) / ((b + s - 1) * s) * z * acc;
  return acc;
}

}  // namespace

TEST_CASE("M at z = 0 is one") {
  for (double a : {-3.0, 0.5, 7.25}) {
    for (double b : {0.5, 1.0, 3.0}) CHECK(kummer_m(ExactParam(a), ExactParam(b), 0.0).value == 1.0);
  }
}

TEST_CASE("terminating M") {
  const SeriesEval e = kummer_m(ExactParam(-1.0), ExactParam(2.0), 2.0);
  CHECK(e.value == 0.0);
  CHECK(e.terminated == Termination::PolynomialExact);
  CHECK(e.terms_used == 2);
  CHECK(kummer_m(ExactParam(-2.0), ExactParam(1.0), 2.0).value == -1.0);
  CHECK(kummer_m(ExactParam(0.0), ExactParam(2.5), 123.0).value == 1.0);
}

TEST_CASE("M reference values") {
  struct Row {
    double a, b, z, ref;
  };
  const Row rows[] = {
      {0.5, 1.5, 2, 2.3644538928052092846},       {0.3, 1.7, 0.5, 1.1000609441391704637},
      {-2.5, 3.2, 7, 0.51761862180208202481},     {1.3, 0.2, 15, 336060995.10595062308},
      {0.7, 2.5, -12, 0.2387759793463777019},     {5, 0.5, -30, -4.081276458618394728e-6},
      {0.5, 1.5, 40, 2980568725898932.8174},      {-7.3, 2.2, -18, 174612.93994754202179},
      {3.5, 1.25, -0.75, -0.035119076612517782403},
  };
  for (const Row& r : rows) {
    const SeriesEval e = kummer_m(ExactParam(r.a), ExactParam(r.b), r.z);
    INFO(r.a, " ", r.b, " ", r.z);
    CHECK(rel(e.value, r.ref) < 1e-12);
    CHECK(e.abs_error_est >= 0.0);
  }
}

TEST_CASE("M is undefined for non-positive integer b") {
  CHECK_THROWS_AS(kummer_m(ExactParam(0.5), ExactParam(-1.0), 1.0), UndefinedFunction);
  CHECK_THROWS_AS(kummer_m(ExactParam(0.5), ExactParam(0.0), 1.0), UndefinedFunction);
  CHECK_NOTHROW(kummer_m(ExactParam(0.5), ExactParam(-1.0 + 1e-9), 1.0));
}

TEST_CASE("first Kummer transformation example") {
  const double lhs = kummer_m(ExactParam(0.3), ExactParam(1.7), 0.5).value;
  const double rhs = std::exp(0.5) * kummer_m(ExactParam(1.4), ExactParam(1.7), -0.5).value;
  CHECK(rel(lhs, rhs) < 1e-12);
}

TEST_CASE("first Kummer transformation on random parameters") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ua(-6.0, 6.0), ub(-6.0, 6.0), uz(-20.0, 20.0);
  int checked = 0;
  while (checked < 200) {
    const ExactParam a(ua(rng));
    const ExactParam b(ub(rng));
    const double z = uz(rng);
    if (std::fabs(b.value() - std::nearbyint(b.value())) < 0.05 && b.value() < 0.5) continue;
    const double lhs = kummer_m(a, b, z).value;
    const double rhs = std::exp(z) * kummer_m(offset_difference(0, b, a), b, -z).value;
    INFO(a.value(), " ", b.value(), " ", z);
    CHECK(std::fabs(lhs - rhs) <= 1e-11 * std::max(std::fabs(lhs), std::fabs(rhs)));
    ++checked;
  }
}

TEST_CASE("terminating M matches an exact rational evaluation") {
  using Q = boost::multiprecision::cpp_rational;
  for (int m = 0; m <= 12; ++m) {
    for (int bq : {1, 2, 3, 5}) {
      for (double z : {0.5, 1.0, 2.0, 3.0, -1.5}) {
        const SeriesEval e = kummer_m(ExactParam::integer(-m), ExactParam(bq), z);
        CHECK(e.terms_used == m + 1);
        CHECK(e.terminated == Termination::PolynomialExact);
        const double exact = static_cast<double>(exact_polynomial(m, Q(bq), Q(z)));
        CHECK(std::fabs(e.value - exact) <= e.abs_error_est);
      }
    }
  }
  // dyadic cases are representable throughout and must match bit for bit
  CHECK(kummer_m(ExactParam(-2.0), ExactParam(1.0), 2.0).value ==
        static_cast<double>(exact_polynomial(2, Q(1), Q(2))));
  CHECK(kummer_m(ExactParam(-1.0), ExactParam(2.0), 2.0).value ==
        static_cast<double>(exact_polynomial(1, Q(2), Q(2))));
  CHECK(kummer_m(ExactParam(-1.0), ExactParam(4.0), 2.0).value ==
        static_cast<double>(exact_polynomial(1, Q(4), Q(2))));
}

TEST_CASE("error estimate bounds the first neglected term") {
  const EvalConfig cfg;
  const double a = 0.3, b = 1.7, z = 3.0;
  const SeriesEval e = kummer_m(ExactParam(a), ExactParam(b), z, cfg);
  REQUIRE(e.terminated == Termination::Converged);
  double t = 1.0;
  for (int s = 0; s < e.terms_used; ++s) t *= (a + s) / (b + s) * z / (s + 1);
  CHECK(e.abs_error_est >= std::fabs(t));
}

TEST_CASE("term cap raises NonConvergence") {
  EvalConfig cfg;
  cfg.max_terms = 5;
  CHECK_THROWS_AS(kummer_m(ExactParam(0.5), ExactParam(1.5), 10.0, cfg), NonConvergence);
  CHECK_NOTHROW(kummer_m(ExactParam(-20.0), ExactParam(1.5), 10.0, cfg));
}

TEST_CASE("M satisfies Kummer's equation") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> ua(-8.0, 8.0), ub(-8.0, 8.0), uz(-15.0, 15.0);
  for (int i = 0; i < 300; ++i) {
    const double a = ua(rng), b = ub(rng), z = uz(rng);
    if (std::fabs(b - std::nearbyint(b)) < 0.05 && b < 0.5) continue;
    const Jet<double> w = kummer_m_jet(ExactParam(a), ExactParam(b), z);
    INFO(a, " ", b, " ", z);
    CHECK(scaled_residual(w, a, b, z) < 1e-8);
  }
}

TEST_CASE("M tilde") {
  for (double a : {-2.0, 0.3, 4.5}) {
    for (double z : {0.1, 1.0, 6.0}) {
      const SeriesEval t = m_tilde(ExactParam(a), ExactParam(1.0), z);
      const SeriesEval m = kummer_m(ExactParam(a), ExactParam(1.0), z);
      CHECK(t.value == m.value);
    }
  }
  CHECK_THROWS_AS(m_tilde(ExactParam(0.5), ExactParam(3.0), 1.0), UndefinedFunction);
  CHECK_THROWS_AS(m_tilde(ExactParam(0.5), ExactParam(2.0), 1.0), UndefinedFunction);
  CHECK_THROWS_AS(m_tilde(ExactParam(0.5), ExactParam(0.5), 0.0), DomainError);
  CHECK_THROWS_AS(m_tilde(ExactParam(0.5), ExactParam(0.5), -1.0), DomainError);
  for (double z : {1e-4, 1e-6, 1e-8}) {
    const double v = m_tilde(ExactParam(0.5), ExactParam(0.5), z).value;
    CHECK(std::fabs(v / std::sqrt(z) - 1.0) < 2.0 * z);
  }
}

TEST_CASE("M tilde satisfies Kummer's equation with the same parameters") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ua(-6.0, 6.0), ub(-6.0, 1.9), uz(0.05, 12.0);
  for (int i = 0; i < 300; ++i) {
    const double a = ua(rng), b = ub(rng), z = uz(rng);
    const Jet<double> w = m_tilde_jet(ExactParam(a), ExactParam(b), z);
    INFO(a, " ", b, " ", z);
    CHECK(scaled_residual(w, a, b, z) < 1e-8);
  }
  for (int n = 0; n <= 4; ++n) {
    const Jet<double> w = m_tilde_jet(ExactParam(0.35), ExactParam::integer(-n), 1.3);
    CHECK(scaled_residual(w, 0.35, -n, 1.3) < 1e-8);
  }
}
