#include "macfrac/kernel.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "macfrac/special.hpp"

namespace macfrac {

namespace {

// Fornberg weights for the d-th derivative at x0 = 0 on the given nodes.
// B. Fornberg, "Generation of finite difference formulas on arbitrarily
// spaced grids", Math. Comp. 51 (1988).
std::vector<Real> fornberg_weights(const std::vector<Real>& nodes, int d,
                                   const PrecisionContext& ctx) {
  const int n = static_cast<int>(nodes.size()) - 1;
  std::vector<std::vector<Real>> c(
      static_cast<size_t>(n) + 1,
      std::vector<Real>(static_cast<size_t>(d) + 1, Real(0L, ctx)));
  Real c1(1L, ctx);
  Real c4 = nodes[0];
  c[0][0] = Real(1L, ctx);
  for (int i = 1; i <= n; ++i) {
    int mn = std::min(i, d);
    Real c2(1L, ctx);
    Real c5 = c4;
    c4 = nodes[static_cast<size_t>(i)];
    for (int j = 0; j < i; ++j) {
      Real c3 = nodes[static_cast<size_t>(i)] - nodes[static_cast<size_t>(j)];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[static_cast<size_t>(i)][static_cast<size_t>(k)] =
              c1 *
              (k * c[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)] -
               c5 * c[static_cast<size_t>(i - 1)][static_cast<size_t>(k)]) /
              c2;
        }
        c[static_cast<size_t>(i)][0] =
            -c1 * c5 * c[static_cast<size_t>(i - 1)][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[static_cast<size_t>(j)][static_cast<size_t>(k)] =
            (c4 * c[static_cast<size_t>(j)][static_cast<size_t>(k)] -
             k * c[static_cast<size_t>(j)][static_cast<size_t>(k - 1)]) /
            c3;
      }
      c[static_cast<size_t>(j)][0] = c4 * c[static_cast<size_t>(j)][0] / c3;
    }
    c1 = c2;
  }
  std::vector<Real> w;
  w.reserve(nodes.size());
  for (const auto& row : c) w.push_back(row[static_cast<size_t>(d)]);
  return w;
}

}  // namespace

Real kernel_eval(const KernelSlice& ks, const Real& r,
                 const PrecisionContext& ctx) {
  return spectrum_eval(*ks.spectrum, r, ctx) * pow(ks.x, r) *
         recip_gamma(r + 1, ctx);
}

Real kernel_derivative_at_zero(const KernelSlice& ks, int d,
                               const PrecisionContext& ctx, int m_max) {
  if (!ks.spectrum->has_continuous_part()) {
    throw std::logic_error("kernel_derivative_at_zero: spectrum '" +
                           ks.spectrum->name() +
                           "' is atomic; order-derivatives do not apply");
  }
  if (d < 1 || d > 2 * m_max - 1) {
    throw std::domain_error("kernel_derivative_at_zero: derivative order " +
                            std::to_string(d) + " outside [1, " +
                            std::to_string(2 * m_max - 1) + "]");
  }
  // Elevated precision absorbs the h^-d roundoff amplification; the stencil
  // half-width keeps the truncation order at d+4 or better while staying
  // inside [r_min, r_min + 1].
  PrecisionContext inner(3 * ctx.digits());
  Real h = pow10(-(ctx.digits() / 4), inner);
  const int half = (d + 13) / 2;

  std::vector<Real> nodes;
  nodes.reserve(static_cast<size_t>(2 * half) + 1);
  for (int i = -half; i <= half; ++i) nodes.push_back(i * h);
  std::vector<Real> w = fornberg_weights(nodes, d, inner);

  Real xi(inner.bits());
  mpfr_set(xi.raw(), ks.x.raw(), MPFR_RNDN);
  KernelSlice inner_slice(*ks.spectrum, xi);

  Real acc(0L, inner);
  for (size_t i = 0; i < nodes.size(); ++i) {
    acc += w[i] * kernel_eval(inner_slice, nodes[i], inner);
  }
  Real out(ctx.bits());
  mpfr_set(out.raw(), acc.raw(), MPFR_RNDN);
  return out;
}

Real closed_form_kernel_derivative(const std::string& name, const Real& x,
                                   int d, const PrecisionContext& ctx) {
  if (d != 1 && d != 3) {
    throw std::domain_error(
        "closed_form_kernel_derivative: only d = 1 and d = 3 are tabulated");
  }
  Real lx = log(x);
  if (name == "geom") {
    return d == 1 ? lx : pow(lx, 3L);
  }
  Real L = lx + constant("euler_gamma", ctx);
  if (name == "exp") {
    if (d == 1) return L;
    Real pi = constant("pi", ctx);
    return pow(L, 3L) - pi * pi / 2 * L + 2 * constant("zeta3", ctx);
  }
  if (name == "sin") {
    Real pi = constant("pi", ctx);
    if (d == 1) return pi / 2;
    return 3 * pi / 8 * (4 * L * L - pi * pi);
  }
  throw std::invalid_argument(
      "closed_form_kernel_derivative: no closed form for '" + name + "'");
}

}  // namespace macfrac
