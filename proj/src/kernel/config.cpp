#include "chf/config.hpp"

#include <cstdlib>
#include <string>

namespace chf {

EvalConfig EvalConfig::from_env() {
  EvalConfig cfg;
  if (const char* tol = std::getenv("CHF_TOL"); tol && *tol) {
    const double v = std::strtod(tol, nullptr);
    if (v > 0.0) cfg.tolerance = v;
  }
  if (const char* cap = std::getenv("CHF_MAX_TERMS"); cap && *cap) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v > 0) cfg.max_terms = static_cast<int>(v);
  }
  return cfg;
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::Converged:
      return "Converged";
    case Termination::PolynomialExact:
      return "PolynomialExact";
    case Termination::MaxTermsHit:
      return "MaxTermsHit";
  }
  return "?";
}

}  // namespace chf
