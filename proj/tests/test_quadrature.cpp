#include <doctest.h>

#include "macfrac/kernel.hpp"
#include "macfrac/quadrature.hpp"
#include "macfrac/special.hpp"
#include "test_util.hpp"

using namespace macfrac;
using testutil::rel_close;

namespace {
const PrecisionContext ctx(100);
}

TEST_CASE("finite segments with closed-form answers") {
  Real one(1L, ctx);
  auto [c, ce] = integrate_segment([&](const Real&) { return Real(1L, ctx); },
                                   Real(0L, ctx), one, ctx);
  CHECK(rel_close(c, one, ctx.quad_tol()));

  auto [d, de] = integrate_segment([](const Real& r) { return exp(-r); },
                                   Real(0L, ctx), one, ctx);
  CHECK(rel_close(d, 1 - exp(Real(-1L, ctx)), ctx.quad_tol()));

  Real pi = constant("pi", ctx);
  auto [s, se] = integrate_segment([](const Real& r) { return sin(r); },
                                   Real(0L, ctx), pi, ctx);
  CHECK(rel_close(s, Real(2L, ctx), ctx.quad_tol()));
  CHECK(se >= Real(0L, ctx));
}

TEST_CASE("segment rejects a degenerate interval") {
  CHECK_THROWS_AS(integrate_segment([](const Real& r) { return r; },
                                    Real(1L, ctx), Real(1L, ctx), ctx),
                  std::invalid_argument);
}

TEST_CASE("segment reports non-convergence on a jump discontinuity") {
  // jump placed off-center so no symmetric rule integrates it exactly
  auto step = [](const Real& r) {
    PrecisionContext c(20);
    return r < Real(0.31830988618367, c) ? Real(0L, c) : Real(1L, c);
  };
  CHECK_THROWS_AS(
      integrate_segment(step, Real(0L, ctx), Real(1L, ctx), ctx, /*max_levels=*/5),
      NumericalError);
}

TEST_CASE("semi-infinite exponentials") {
  auto res = integrate_semi_infinite([](const Real& r) { return exp(-r); }, ctx);
  CHECK(rel_close(res.value, Real(1L, ctx), 4 * ctx.quad_tol()));
  CHECK(res.truncation_radius >= Real(1L, ctx));
  CHECK(res.segments_used > 2);
  CHECK(res.error_estimate <= ctx.quad_tol() * max(Real(1L, ctx), abs(res.value)));

  // geom kernel at x = 1/e: integral of x^r over [0, inf) is exactly 1
  Real x = 1 / constant("e", ctx);
  auto geom = integrate_semi_infinite(
      [&](const Real& r) { return pow(x, r); }, ctx);
  CHECK(rel_close(geom.value, Real(1L, ctx), 4 * ctx.quad_tol()));
}

TEST_CASE("reciprocal-gamma tail fixture against a doubled-precision oracle") {
  auto res = integrate_semi_infinite(
      [&](const Real& r) { return recip_gamma(r + 1, ctx); }, ctx);
  PrecisionContext twice(2 * ctx.digits());
  auto oracle = integrate_semi_infinite(
      [&](const Real& r) { return recip_gamma(r + 1, twice); }, twice);
  CHECK(abs(res.value - oracle.value) < pow10(5 - ctx.digits(), twice));
  // 30-digit prefix frozen from the doubled-precision oracle run
  CHECK(rel_close(res.value, Real("2.26653450769984883507196385768", ctx),
                  Real("1e-29", ctx)));
}

TEST_CASE("truncation failure for a non-decaying integrand") {
  CHECK_THROWS_AS(integrate_semi_infinite(
                      [&](const Real&) { return Real(1L, ctx); }, ctx),
                  NumericalError);
}

TEST_CASE("precision scaling of kernel transforms") {
  PrecisionContext lo(60);
  PrecisionContext hi(120);
  for (const char* name : {"exp", "sin"}) {
    OrderSpectrum s = builtin_spectrum(name);
    Real x_lo(1.3, lo), x_hi(1.3, hi);
    KernelSlice kl(s, x_lo), kh(s, x_hi);
    auto a = integrate_semi_infinite(
        [&](const Real& r) { return kernel_eval(kl, r, lo); }, lo);
    auto b = integrate_semi_infinite(
        [&](const Real& r) { return kernel_eval(kh, r, hi); }, hi);
    CHECK(abs(a.value - b.value) < pow10(5 - lo.digits(), hi));
  }
}

TEST_CASE("panel-width robustness") {
  // Integrating over [0,1] as one segment or as two halves agrees within the
  // reported estimates.
  auto f = [](const Real& r) { return exp(-(r * r)); };
  auto [whole, we] = integrate_segment(f, Real(0L, ctx), Real(1L, ctx), ctx);
  auto [left, le] = integrate_segment(f, Real(0L, ctx), Real(0.5, ctx), ctx);
  auto [right, re] = integrate_segment(f, Real(0.5, ctx), Real(1L, ctx), ctx);
  CHECK(abs(whole - (left + right)) <= we + le + re + 10 * ctx.eps());
}

TEST_CASE("linearity on exp/sin kernel pairs") {
  OrderSpectrum se = builtin_spectrum("exp");
  OrderSpectrum ss = builtin_spectrum("sin");
  Real x(1.2, ctx);
  KernelSlice ke(se, x), ks(ss, x);
  auto fe = [&](const Real& r) { return kernel_eval(ke, r, ctx); };
  auto fs = [&](const Real& r) { return kernel_eval(ks, r, ctx); };
  Real alpha(3L, ctx), beta(-2L, ctx);
  auto combo = integrate_semi_infinite(
      [&](const Real& r) { return alpha * fe(r) + beta * fs(r); }, ctx);
  auto a = integrate_semi_infinite(fe, ctx);
  auto b = integrate_semi_infinite(fs, ctx);
  Real lhs = combo.value;
  Real rhs = alpha * a.value + beta * b.value;
  Real budget = combo.error_estimate + 3 * a.error_estimate + 2 * b.error_estimate;
  CHECK(abs(lhs - rhs) <= budget + 100 * ctx.eps());
}
