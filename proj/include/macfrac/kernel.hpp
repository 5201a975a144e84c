#pragma once

// The integrand k(r;x) = D^r f(0) * x^r / Gamma(r+1) of the continuous-order
// transform, its order-derivatives at r = 0, and the closed-form derivative
// table for the three families where the corrections are known analytically.

#include "macfrac/real.hpp"
#include "macfrac/spectra.hpp"

namespace macfrac {

/// Kernel restricted to a fixed evaluation point x.
struct KernelSlice {
  const OrderSpectrum* spectrum;
  Real x;  // must lie in spectrum->x_domain()

  KernelSlice(const OrderSpectrum& s, Real point)
      : spectrum(&s), x(std::move(point)) {}
};

/// k(r;x) = spectrum(r) * x^r / Gamma(r+1).
Real kernel_eval(const KernelSlice& ks, const Real& r,
                 const PrecisionContext& ctx);

/// d-th derivative of r -> k(r;x) at r = 0, by centered finite differences
/// at elevated internal precision. d must be odd-meaningful only via the
/// correction series; any d in [1, 2*m_max-1] is accepted.
Real kernel_derivative_at_zero(const KernelSlice& ks, int d,
                               const PrecisionContext& ctx, int m_max = 5);

/// Analytic k^{(d)}(0;x) for the families worked out by hand:
///   geom: d=1 -> ln x,        d=3 -> (ln x)^3
///   exp:  d=1 -> ln x + g,    d=3 -> L^3 - (pi^2/2) L + 2 zeta(3), L = ln x + g
///   sin:  d=1 -> pi/2,        d=3 -> (3 pi / 8) (4 L^2 - pi^2)
/// where g is the Euler-Mascheroni constant.
Real closed_form_kernel_derivative(const std::string& name, const Real& x,
                                   int d, const PrecisionContext& ctx);

}  // namespace macfrac
