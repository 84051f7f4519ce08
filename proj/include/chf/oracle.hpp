#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chf/classifier.hpp"
#include "chf/config.hpp"
#include "chf/exact_param.hpp"
#include "chf/jet.hpp"

namespace chf::oracle {

/// Kummer-equation residual |z w'' + (b - z) w' - a w| over a sample set,
/// divided by scale = max (|w| + |w'| + |w''|)(1 + |z|).
struct ResidualReport {
  double max_scaled_residual = 0.0;
  std::vector<double> sample_points;
  double scale = 0.0;
  bool degenerate = false;  // w vanished identically on the samples

  bool passes(double threshold = 1e-8) const { return !degenerate && max_scaled_residual < threshold; }
};

ResidualReport ode_residual(const SolutionDescriptor& solution, const ExactParam& a, const ExactParam& b,
                            const std::vector<double>& z_samples, const EvalConfig& cfg = {});

/// Residual from precomputed jets at the sample points.
ResidualReport ode_residual_from_jets(double a, double b, const std::vector<double>& z_samples,
                                      const std::vector<Jet<double>>& jets);

/// Residual of a value-only function; derivatives by 5-point central
/// differences with step h = 1e-5 z.
ResidualReport ode_residual_fd(const std::function<double(double)>& w, double a, double b,
                               const std::vector<double>& z_samples);

Jet<double> central_difference_jet(const std::function<double(double)>& w, double z);

/// f g' - f' g.
double wronskian(const Jet<double>& f, const Jet<double>& g);
double wronskian(const SolutionDescriptor& f, const SolutionDescriptor& g, const ExactParam& a, const ExactParam& b,
                 double z, const EvalConfig& cfg = {});

struct WronskianCertificate {
  double wronskian = 0.0;
  double scale = 0.0;  // (|f| + |f'|)(|g| + |g'|)
  bool independent = false;
};

/// Independence test |W| > threshold x scale at z.
WronskianCertificate certify_pair(const SolutionDescriptor& f, const SolutionDescriptor& g, const ExactParam& a,
                                  const ExactParam& b, double z = 1.0, double threshold = 1e-6,
                                  const EvalConfig& cfg = {});

/// M(a, b, z) summed term by term in MPFR at `digits` significant digits
/// (plus guard digits for the cancellation of negative z).
struct HighPrecValue {
  double value = 0.0;
  std::string decimal;  // `digits` significant digits
  unsigned digits = 0;
  int terms = 0;
};

/// Throws UndefinedFunction for b in Z<=0, std::invalid_argument for digits
/// outside [10, 100].
HighPrecValue highprec_m(const ExactParam& a, const ExactParam& b, double z, unsigned digits = 50);

using Rational = boost::multiprecision::cpp_rational;

/// Exact M(-m, b, z) for rational b and z by rational Horner evaluation.
Rational rational_m_polynomial(std::int64_t m, const Rational& b, const Rational& z);

/// Random tagged parameters lying in `cell`. Mixes dyadic non-integers with
/// unrestricted doubles; magnitudes stay within 8. Throws
/// std::invalid_argument for DNO cells.
struct ParamDraw {
  ExactParam a;
  ExactParam b;
};

ParamDraw draw_for_cell(const CaseId& cell, std::mt19937_64& rng);

/// The 12 cells that occur, row-major.
std::vector<CaseId> realizable_cells();

}  // namespace chf::oracle
