#pragma once

// Segmented adaptive integration over [0, inf) for super-exponentially
// decaying integrands at arbitrary precision. Panels are integrated by
// Gauss-Legendre rules of doubling order; the difference between successive
// orders is the error estimate.

#include <functional>
#include <stdexcept>
#include <utility>

#include "macfrac/real.hpp"

namespace macfrac {

/// Quadrature or differentiation failed to meet its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  Real value;
  Real error_estimate;
  Real truncation_radius;
  int segments_used = 0;
};

using Integrand = std::function<Real(const Real&)>;

/// Integral of f over [a, b] with the achieved error estimate.
/// Throws NumericalError if the estimate stagnates above ctx.quad_tol after
/// max_levels order-doubling refinements.
std::pair<Real, Real> integrate_segment(const Integrand& f, const Real& a,
                                        const Real& b,
                                        const PrecisionContext& ctx,
                                        int max_levels = 12);

/// Integral of f over [0, inf) via panels [0,1], [1,2], [2,4], [4,8], ...
/// stopping once two consecutive panel contributions are each below
/// quad_tol * max(1, |accumulated|). Throws NumericalError if the stopping
/// rule is unmet by radius 2^16.
QuadratureResult integrate_semi_infinite(const Integrand& f,
                                         const PrecisionContext& ctx);

}  // namespace macfrac
