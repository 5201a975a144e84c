#include <doctest.h>

#include "macfrac/kernel.hpp"
#include "macfrac/special.hpp"
#include "test_util.hpp"

using namespace macfrac;
using testutil::rel_close;
using testutil::within_ulps;

namespace {
const PrecisionContext ctx(100);

Real inv_e() { return 1 / constant("e", ctx); }
}  // namespace

TEST_CASE("kernel values at sample orders") {
  KernelSlice exp1(builtin_spectrum("exp"), Real(1L, ctx));
  CHECK(kernel_eval(exp1, Real(0L, ctx), ctx) == Real(1L, ctx));

  KernelSlice geom_half(builtin_spectrum("geom"), Real(0.5, ctx));
  CHECK(within_ulps(kernel_eval(geom_half, Real(2L, ctx), ctx),
                    Real(0.25, ctx), 5));

  KernelSlice sin2(builtin_spectrum("sin"), Real(2L, ctx));
  CHECK(within_ulps(kernel_eval(sin2, Real(1L, ctx), ctx), Real(2L, ctx), 5));
}

TEST_CASE("geom kernel collapses to x^r") {
  OrderSpectrum geom = builtin_spectrum("geom");
  for (double xd : {0.2, 0.5, 0.8}) {
    KernelSlice ks(geom, Real(xd, ctx));
    for (double rd : {0.0, 0.7, 3.3, 11.0}) {
      Real r(rd, ctx);
      CHECK(within_ulps(kernel_eval(ks, r, ctx), pow(Real(xd, ctx), r), 5));
    }
  }
}

TEST_CASE("kernel at integer orders equals the Maclaurin term") {
  for (const char* name : {"exp", "geom", "sin", "expsq", "gauss", "besselj0"}) {
    OrderSpectrum s = builtin_spectrum(name);
    Real x(0.7, ctx);
    KernelSlice ks(s, x);
    for (long n = 0; n <= 8; ++n) {
      // independent route: series coefficient times x^n / n!
      Real term = testutil::integer_derivative(name, static_cast<int>(n), ctx) *
                  pow(x, n) / testutil::from_mpz(testutil::fact(static_cast<int>(n)), ctx);
      Real got = kernel_eval(ks, Real(n, ctx), ctx);
      if (term.is_zero() || abs(term) < ctx.eps()) {
        CHECK(abs(got) < 10 * ctx.eps());
      } else {
        CHECK(within_ulps(got, term, 10));
      }
    }
  }
}

TEST_CASE("first-derivative fixtures") {
  KernelSlice exp1(builtin_spectrum("exp"), Real(1L, ctx));
  Real tol = pow10(-(ctx.digits() / 2) + 5, ctx);
  CHECK(rel_close(kernel_derivative_at_zero(exp1, 1, ctx),
                  constant("euler_gamma", ctx), tol));

  KernelSlice geom_e(builtin_spectrum("geom"), inv_e());
  CHECK(rel_close(kernel_derivative_at_zero(geom_e, 1, ctx), Real(-1L, ctx), tol));
  CHECK(rel_close(kernel_derivative_at_zero(geom_e, 3, ctx), Real(-1L, ctx), tol));
}

TEST_CASE("derivative preconditions") {
  KernelSlice mono(builtin_spectrum("monomial:2"), Real(1L, ctx));
  CHECK_THROWS_AS(kernel_derivative_at_zero(mono, 1, ctx), std::logic_error);
  KernelSlice exp1(builtin_spectrum("exp"), Real(1L, ctx));
  CHECK_THROWS_AS(kernel_derivative_at_zero(exp1, 0, ctx), std::domain_error);
  CHECK_THROWS_AS(kernel_derivative_at_zero(exp1, 10, ctx), std::domain_error);
}

TEST_CASE("closed-form derivative table") {
  Real g = constant("euler_gamma", ctx);
  Real pi = constant("pi", ctx);
  CHECK(closed_form_kernel_derivative("exp", Real(1L, ctx), 1, ctx) == g);
  CHECK(rel_close(closed_form_kernel_derivative("geom", inv_e(), 3, ctx),
                  Real(-1L, ctx), Real("1e-95", ctx)));
  CHECK(closed_form_kernel_derivative("sin", Real(0.37, ctx), 1, ctx) == pi / 2);
  CHECK_THROWS_AS(closed_form_kernel_derivative("gauss", Real(1L, ctx), 1, ctx),
                  std::invalid_argument);
  CHECK_THROWS_AS(closed_form_kernel_derivative("exp", Real(1L, ctx), 2, ctx),
                  std::domain_error);
}

TEST_CASE("numeric derivatives agree with the closed forms") {
  Real tol = pow10(-(ctx.digits() / 2) + 5, ctx);
  Real e = constant("e", ctx);
  for (const char* name : {"exp", "geom", "sin"}) {
    OrderSpectrum s = builtin_spectrum(name);
    std::vector<Real> xs;
    if (std::string(name) == "geom") {
      xs = {Real(0.3, ctx), inv_e(), Real(0.62, ctx), Real(0.9, ctx)};
    } else {
      xs = {Real(0.3, ctx), Real(1L, ctx), e, Real(2.5, ctx)};
    }
    for (const Real& x : xs) {
      KernelSlice ks(s, x);
      for (int d : {1, 3}) {
        Real numeric = kernel_derivative_at_zero(ks, d, ctx);
        Real closed = closed_form_kernel_derivative(name, x, d, ctx);
        INFO(name << " d=" << d << " x=" << x.to_string(8));
        CHECK(abs(numeric - closed) <=
              tol * max(Real(1L, ctx), abs(closed)));
      }
    }
  }
}

TEST_CASE("super-exponential decay of the kernel") {
  Real tol = ctx.quad_tol();
  for (const char* name : {"exp", "sin", "expsq", "gauss", "besselj0"}) {
    KernelSlice ks(builtin_spectrum(name), Real(2.5, ctx));
    CHECK(abs(kernel_eval(ks, Real(300L, ctx), ctx)) < tol);
  }
  KernelSlice geom(builtin_spectrum("geom"), Real(0.5, ctx));
  CHECK(abs(kernel_eval(geom, Real(400L, ctx), ctx)) < tol);
}
