#pragma once

// The continuous-order transform T[f](x), its correction series E_n, the
// classical Maclaurin partial-sum oracle, and pointwise reconstruction.

#include <vector>

#include "macfrac/kernel.hpp"
#include "macfrac/quadrature.hpp"
#include "macfrac/real.hpp"
#include "macfrac/spectra.hpp"

namespace macfrac {

inline constexpr int kDefaultMaxCorrections = 5;

struct ReconstructionResult {
  Real x;
  Real transform;
  std::vector<Real> corrections;  // E_0 .. E_m; empty for atomic spectra
  Real corrected;                 // transform + sum(corrections)
  Real truth;                     // reference_value
  Real residual_raw;              // truth - transform
  Real residual_corrected;        // truth - corrected
  int m = -1;                     // -1 marks the atomic (exact) path
};

/// T[f](x): quadrature of the kernel over [0, inf) plus atomic contributions
/// weight * x^order / Gamma(order+1). Purely atomic spectra skip quadrature.
Real transform(const OrderSpectrum& s, const Real& x,
               const PrecisionContext& ctx);

/// E_0 = k(0;x)/2; E_n = -B_{2n}/(2n)! * k^{(2n-1)}(0;x). Uses the closed
/// forms for exp/geom/sin when n <= 2.
Real correction_term(const OrderSpectrum& s, const Real& x, int n,
                     const PrecisionContext& ctx);

/// Same E_n but always through numeric differentiation; kept separate so the
/// two routes stay independently testable.
Real correction_term_numeric(const OrderSpectrum& s, const Real& x, int n,
                             const PrecisionContext& ctx);

/// [E_0, ..., E_m].
std::vector<Real> correction_series(const OrderSpectrum& s, const Real& x,
                                    int m, const PrecisionContext& ctx);

/// Classical Maclaurin partial sum from the spectrum's integer-order data;
/// the discrete-side oracle of the sum-integral comparison.
Real maclaurin_sum(const OrderSpectrum& s, const Real& x,
                   const PrecisionContext& ctx);

/// Full pipeline at one point. Atomic spectra take the exact path
/// (no corrections).
ReconstructionResult reconstruct_point(const OrderSpectrum& s, const Real& x,
                                       int m, const PrecisionContext& ctx);

}  // namespace macfrac
