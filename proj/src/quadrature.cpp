#include "macfrac/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace macfrac {

namespace {

// One half of a symmetric Gauss-Legendre rule on [-1, 1]: nodes in (0, 1]
// with their weights. For odd n the node at 0 carries half its weight here.
struct HalfRule {
  std::vector<std::pair<Real, Real>> nodes;  // (abscissa, weight)
  bool has_center = false;
  Real center_weight;
};

// Legendre P_n and P_n' at x by the three-term recurrence.
void legendre(int n, const Real& x, Real& p, Real& dp) {
  Real p0(1L, x.prec());
  Real p1 = x;
  for (int k = 2; k <= n; ++k) {
    Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1);
}

HalfRule build_half_rule(int n, mpfr_prec_t prec) {
  HalfRule rule;
  // Newton from the Chebyshev-like initial guess; quadratic convergence
  // reaches full precision in O(log bits) steps.
  int iters = 4 + static_cast<int>(std::log2(static_cast<double>(prec) / 50.0 + 2.0));
  for (int k = 1; k <= n / 2; ++k) {
    double x0 = std::cos(M_PI * (k - 0.25) / (n + 0.5));
    Real x(static_cast<mpfr_prec_t>(prec));
    mpfr_set_d(x.raw(), x0, MPFR_RNDN);
    Real p(prec), dp(prec);
    for (int it = 0; it < iters; ++it) {
      legendre(n, x, p, dp);
      x -= p / dp;
    }
    legendre(n, x, p, dp);
    Real w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes.emplace_back(std::move(x), std::move(w));
  }
  if (n % 2 == 1) {
    Real x(0L, prec);
    Real p(prec), dp(prec);
    legendre(n, x, p, dp);
    rule.has_center = true;
    rule.center_weight = 2 / (dp * dp);
  }
  return rule;
}

const HalfRule& cached_rule(int n, mpfr_prec_t prec) {
  static std::map<std::pair<int, long>, HalfRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, static_cast<long>(prec));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_half_rule(n, prec)).first;
  return it->second;
}

Real apply_rule(const Integrand& f, const Real& a, const Real& b, int n,
                const PrecisionContext& ctx) {
  const HalfRule& rule = cached_rule(n, ctx.bits());
  Real mid = (a + b) / 2;
  Real half = (b - a) / 2;
  Real acc(0L, ctx);
  for (const auto& [x, w] : rule.nodes) {
    Real dx = half * x;
    acc += w * (f(mid + dx) + f(mid - dx));
  }
  if (rule.has_center) acc += rule.center_weight * f(mid);
  return acc * half;
}

}  // namespace

namespace {

std::pair<Real, Real> segment_with_tol(const Integrand& f, const Real& a,
                                       const Real& b,
                                       const PrecisionContext& ctx,
                                       const Real& tol, int max_levels) {
  if (!(b > a)) throw std::invalid_argument("integrate_segment: b must exceed a");
  Real prev = apply_rule(f, a, b, 8, ctx);
  int n = 16;
  for (int level = 0; level < max_levels; ++level, n *= 2) {
    Real cur = apply_rule(f, a, b, n, ctx);
    Real est = abs(cur - prev);
    if (est <= tol * max(Real(1L, ctx), abs(cur))) return {cur, est};
    prev = cur;
  }
  throw NumericalError("integrate_segment: no convergence on [" +
                       a.to_string(10) + ", " + b.to_string(10) + "] after " +
                       std::to_string(max_levels) + " refinement levels");
}

}  // namespace

std::pair<Real, Real> integrate_segment(const Integrand& f, const Real& a,
                                        const Real& b,
                                        const PrecisionContext& ctx,
                                        int max_levels) {
  return segment_with_tol(f, a, b, ctx, ctx.quad_tol(), max_levels);
}

QuadratureResult integrate_semi_infinite(const Integrand& f,
                                         const PrecisionContext& ctx) {
  const double kMaxRadius = 65536.0;
  Real tol = ctx.quad_tol();
  Real seg_tol = tol / 16;
  Real acc(0L, ctx);
  Real err(0L, ctx);
  Real lo(0L, ctx);
  Real hi(1L, ctx);
  int segments = 0;
  int consecutive_small = 0;
  while (true) {
    auto [value, est] = segment_with_tol(f, lo, hi, ctx, seg_tol, 12);
    acc += value;
    err += est;
    ++segments;
    if (abs(value) < tol * max(Real(1L, ctx), abs(acc))) {
      if (++consecutive_small >= 2) break;
    } else {
      consecutive_small = 0;
    }
    if (hi.to_double() >= kMaxRadius) {
      throw NumericalError(
          "integrate_semi_infinite: tail not resolved by radius 65536");
    }
    lo = hi;
    hi = (hi == 1) ? Real(2L, ctx) : hi * 2;
  }
  return QuadratureResult{acc, err, hi, segments};
}

}  // namespace macfrac
