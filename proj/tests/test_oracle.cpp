#include <doctest.h>

#include <cmath>
#include <random>

#include "chf/errors.hpp"
#include "chf/kummer.hpp"
#include "chf/oracle.hpp"
#include "chf/tricomi.hpp"

using namespace chf;
using oracle::Rational;

namespace {

ExactParam I(std::int64_t k) { return ExactParam::integer(k); }
ExactParam R(double x) { return ExactParam(x); }

SolutionDescriptor kind(SolutionKind k) { return {k, false, std::nullopt}; }

double rel(double x, double ref) { return std::fabs(x - ref) / std::fabs(ref); }

}  // namespace

TEST_CASE("ode_residual: M(0.5, 1.5, z) on a wide grid") {
  const auto rep = oracle::ode_residual(kind(SolutionKind::KummerM), R(0.5), R(1.5), {0.5, 1, 2, 5, 10});
  CHECK(rep.max_scaled_residual < 1e-10);
  CHECK(rep.sample_points.size() == 5);
  CHECK(rep.scale > 0.0);
  CHECK_FALSE(rep.degenerate);
}

TEST_CASE("ode_residual: logarithmic second solution of case 4.C") {
  // LogSecond4C(m = 1, n = 2): a = -1, b = 3
  const auto rep = oracle::ode_residual(kind(SolutionKind::LogSecond4C), I(-1), I(3), {0.5, 1, 2, 5});
  CHECK(rep.passes(1e-8));
}

TEST_CASE("ode_residual: identically zero function is degenerate") {
  const auto rep = oracle::ode_residual_fd([](double) { return 0.0; }, 0.3, 0.7, {0.5, 1.0});
  CHECK(rep.degenerate);
  CHECK(rep.max_scaled_residual == 0.0);
  CHECK_FALSE(rep.passes());
}

TEST_CASE("ode_residual: finite differences agree with analytic jets") {
  const ExactParam a(0.3), b(1.7);
  auto w = [&](double z) { return kummer_m(a, b, z).value; };
  const auto fd = oracle::ode_residual_fd(w, 0.3, 1.7, {0.5, 1, 2, 5});
  CHECK(fd.max_scaled_residual < 1e-6);
  const Jet<double> j = kummer_m_jet(a, b, 2.0);
  const Jet<double> jd = oracle::central_difference_jet(w, 2.0);
  CHECK(rel(jd.d1, j.d1) < 1e-9);
  CHECK(rel(jd.d2, j.d2) < 1e-5);
  // a wrong function fails
  const auto bad = oracle::ode_residual_fd([](double z) { return std::exp(z); }, 0.3, 1.7, {0.5, 1, 2});
  CHECK_FALSE(bad.passes());
}

TEST_CASE("wronskian: identical, independent and proportional pairs") {
  const ExactParam a(0.3), b(0.5);
  CHECK(oracle::wronskian(kind(SolutionKind::KummerM), kind(SolutionKind::KummerM), a, b, 1.0) == 0.0);
  const auto c = oracle::certify_pair(kind(SolutionKind::KummerM), kind(SolutionKind::MTilde), a, b);
  CHECK(c.independent);
  // closed form W(M, M~) = (1 - b) z^{-b} e^z
  CHECK(rel(c.wronskian, (1 - 0.5) * std::exp(1.0)) < 1e-12);

  // case 2.A: U is proportional to M~ yet independent of M
  const ExactParam a2(0.5), b2(1.5);
  const auto c2 = oracle::certify_pair(kind(SolutionKind::KummerM), kind(SolutionKind::TricomiU), a2, b2);
  CHECK(c2.independent);
  // W(M, U) = -Gamma(b)/Gamma(a) z^{-b} e^z
  CHECK(rel(c2.wronskian, -std::tgamma(1.5) / std::tgamma(0.5) * std::exp(1.0)) < 1e-12);
  const auto c3 = oracle::certify_pair(kind(SolutionKind::MTilde), kind(SolutionKind::TricomiU), a2, b2);
  CHECK_FALSE(c3.independent);
}

TEST_CASE("highprec_m: basic values and errors") {
  CHECK(oracle::highprec_m(R(0.5), R(1.5), 0.0).value == 1.0);
  CHECK(oracle::highprec_m(R(0.5), R(1.5), 2.0, 40).decimal.substr(0, 20) == "2.364453892805209284");
  CHECK_THROWS_AS(oracle::highprec_m(R(0.5), I(-1), 1.0), UndefinedFunction);
  CHECK_THROWS_AS(oracle::highprec_m(R(0.5), R(1.5), 1.0, 200), std::invalid_argument);
}

TEST_CASE("rational_m_polynomial: M(-3, 2, 1) exactly") {
  // coefficients (-3)_s / ((2)_s s!)
  const Rational expected = Rational(1) - Rational(3, 2) + Rational(1, 2) - Rational(1, 24);
  CHECK(oracle::rational_m_polynomial(3, Rational(2), Rational(1)) == expected);
  CHECK(rel(kummer_m(I(-3), I(2), 1.0).value, static_cast<double>(expected)) < 1e-15);
  CHECK(oracle::rational_m_polynomial(0, Rational(7, 3), Rational(5)) == Rational(1));
}

TEST_CASE("oracle agreement: kummer_m vs highprec_m on random cases") {
  std::mt19937_64 rng(314159);
  std::uniform_real_distribution<double> par(-8.0, 8.0), zd(-10.0, 10.0);
  int checked = 0;
  double worst = 0.0;
  while (checked < 500) {
    const double a = par(rng), b = par(rng), z = zd(rng);
    if (std::fabs(b - std::nearbyint(b)) < 1e-3 && b < 0.5) continue;  // next to a pole in b
    const SeriesEval m = kummer_m(R(a), R(b), z);
    const auto ref = oracle::highprec_m(R(a), R(b), z, 40);
    const double r = rel(m.value, ref.value);
    INFO("a=", a, " b=", b, " z=", z, " M=", m.value, " ref=", ref.decimal);
    // the returned error estimate covers every deviation
    CHECK(std::fabs(m.value - ref.value) <= m.abs_error_est + 1e-16 * std::fabs(ref.value));
    CHECK(r < 1e-13);
    worst = std::max(worst, r);
    ++checked;
  }
  MESSAGE("worst relative deviation ", worst);
}
