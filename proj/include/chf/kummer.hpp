#pragma once

#include "chf/config.hpp"
#include "chf/exact_param.hpp"
#include "chf/jet.hpp"

namespace chf {

/// Kummer's function M(a, b, z) = sum_s (a)_s / (b)_s z^s / s!, real z.
///
/// Exact polynomial (Termination::PolynomialExact) when a is tagged in Z<=0.
/// For z < -1 and a non-polynomial series the first Kummer transformation
/// M(a,b,z) = e^z M(b-a, b, -z) is summed instead.
/// Throws UndefinedFunction for b in Z<=0 and NonConvergence when the term
/// cap is reached with the error estimate above tolerance.
SeriesEval kummer_m(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg = {});

/// M together with dM/dz and d2M/dz2 from the term-wise differentiated series.
Jet<double> kummer_m_jet(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg = {},
                         SeriesEval* info = nullptr);

/// Second power-series solution z^{1-b} M(1+a-b, 2-b, z), z > 0.
///
/// Identical to kummer_m when b = 1. Throws UndefinedFunction for b in Z>=2
/// and DomainError for z <= 0.
SeriesEval m_tilde(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg = {});

Jet<double> m_tilde_jet(const ExactParam& a, const ExactParam& b, double z, const EvalConfig& cfg = {},
                        SeriesEval* info = nullptr);

}  // namespace chf
