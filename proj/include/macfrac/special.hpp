#pragma once

// Special functions and constants at context precision.

#include <string>

#include "macfrac/real.hpp"

namespace macfrac {

/// Gamma(x) for x > 0. Negative arguments are the business of recip_gamma.
Real gamma(const Real& x, const PrecisionContext& ctx);

/// 1/Gamma(x); entire, exactly 0 at non-positive integers.
Real recip_gamma(const Real& x, const PrecisionContext& ctx);

/// Digamma psi(x) for x > 0.
Real digamma(const Real& x, const PrecisionContext& ctx);

/// J0(x) summed from its Maclaurin series at elevated internal precision.
/// |x| is capped (default 50) so the alternating series stays tractable.
Real bessel_j0(const Real& x, const PrecisionContext& ctx,
               double max_abs_x = 50.0);

/// B_{2n} from the exact rational recurrence, rendered at ctx precision.
Real bernoulli_even(int n, const PrecisionContext& ctx, int max_n = 32);

/// Named constant: pi, euler_gamma, zeta3, or e.
Real constant(const std::string& name, const PrecisionContext& ctx);

}  // namespace macfrac
