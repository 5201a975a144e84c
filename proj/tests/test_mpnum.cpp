#include <doctest.h>

#include <gmpxx.h>

#include "macfrac/special.hpp"
#include "test_util.hpp"

using namespace macfrac;
using testutil::rel_close;
using testutil::within_ulps;

namespace {
const PrecisionContext ctx(100);
}

TEST_CASE("PrecisionContext invariants") {
  CHECK_THROWS_AS(PrecisionContext(19), std::invalid_argument);
  CHECK(ctx.digits() == 100);
  CHECK(ctx.eps() < ctx.quad_tol());
  CHECK(ctx.quad_tol() < ctx.diff_tol());
  CHECK(ctx.diff_tol() < Real(1L, ctx));
}

TEST_CASE("gamma at integer and half-integer points") {
  CHECK(gamma(Real(1L, ctx), ctx) == Real(1L, ctx));
  CHECK(gamma(Real(5L, ctx), ctx) == Real(24L, ctx));
  Real sqrt_pi = sqrt(constant("pi", ctx));
  CHECK(within_ulps(gamma(Real(0.5, ctx), ctx), sqrt_pi, 4));
  CHECK_THROWS_AS(gamma(Real(0L, ctx), ctx), std::domain_error);
  CHECK_THROWS_AS(gamma(Real(-2.5, ctx), ctx), std::domain_error);
}

TEST_CASE("recip_gamma values and pole zeros") {
  CHECK(recip_gamma(Real(1L, ctx), ctx) == Real(1L, ctx));
  CHECK(recip_gamma(Real(0L, ctx), ctx).is_zero());
  CHECK(recip_gamma(Real(-4L, ctx), ctx).is_zero());
  // 1/Gamma(3.5) = 8/(15 sqrt(pi))
  Real expected = Real(8L, ctx) / (15 * sqrt(constant("pi", ctx)));
  CHECK(within_ulps(recip_gamma(Real(3.5, ctx), ctx), expected, 8));
}

TEST_CASE("digamma closed forms") {
  Real g = constant("euler_gamma", ctx);
  CHECK(within_ulps(digamma(Real(1L, ctx), ctx), -g, 4));
  CHECK(within_ulps(digamma(Real(2L, ctx), ctx), 1 - g, 4));
  Real ln2 = log(Real(2L, ctx));
  CHECK(within_ulps(digamma(Real(0.5, ctx), ctx), -g - 2 * ln2, 4));
  CHECK_THROWS_AS(digamma(Real(-1L, ctx), ctx), std::domain_error);
}

TEST_CASE("bessel_j0 series oracle") {
  CHECK(bessel_j0(Real(0L, ctx), ctx) == Real(1L, ctx));
  Real first_zero("2.40482555769577", ctx);
  CHECK(abs(bessel_j0(first_zero, ctx)) < Real("1e-12", ctx));
  Real j01 = bessel_j0(Real(1L, ctx), ctx);
  CHECK(rel_close(j01, Real("0.76519768655796655145", ctx), Real("1e-19", ctx)));
  // independent oracle: mpfr's own j0
  Real one(1L, ctx);
  Real mp(ctx.bits());
  mpfr_j0(mp.raw(), one.raw(), MPFR_RNDN);
  CHECK(within_ulps(j01, mp, 8));
  CHECK_THROWS_AS(bessel_j0(Real(51L, ctx), ctx), std::range_error);
}

TEST_CASE("bessel_j0 digits-doubling stability") {
  PrecisionContext twice(200);
  for (double xd : {0.5, 2.0, 10.0, 40.0}) {
    Real lo = bessel_j0(Real(xd, ctx), ctx);
    Real hi = bessel_j0(Real(xd, twice), twice);
    CHECK(abs(lo - hi) < pow10(5 - ctx.digits(), twice));
  }
}

TEST_CASE("bernoulli_even small values") {
  CHECK(bernoulli_even(0, ctx) == Real(1L, ctx));
  CHECK(within_ulps(bernoulli_even(1, ctx), Real(1L, ctx) / 6, 2));
  CHECK(within_ulps(bernoulli_even(2, ctx), Real(-1L, ctx) / 30, 2));
  CHECK(within_ulps(bernoulli_even(3, ctx), Real(1L, ctx) / 42, 2));
  CHECK_THROWS_AS(bernoulli_even(33, ctx), std::range_error);
  CHECK_THROWS_AS(bernoulli_even(-1, ctx), std::domain_error);
}

TEST_CASE("bernoulli_even matches an independent rational recurrence") {
  // B_m = -sum_{k<m} C(m+1,k) B_k / (m+1), evaluated with exact rationals.
  std::vector<mpq_class> b{mpq_class(1)};
  for (int m = 1; m <= 20; ++m) {
    mpq_class acc(0);
    for (int k = 0; k < m; ++k) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
      acc += mpq_class(binom) * b[k];
    }
    acc /= -(m + 1);
    acc.canonicalize();
    b.push_back(acc);
  }
  for (int n = 0; 2 * n <= 20; ++n) {
    Real expected(ctx.bits());
    mpfr_set_q(expected.raw(), b[2 * n].get_mpq_t(), MPFR_RNDN);
    CHECK(bernoulli_even(n, ctx) == expected);
  }
}

TEST_CASE("constants") {
  CHECK(rel_close(constant("euler_gamma", ctx),
                  Real("0.57721566490153286060651209008", ctx),
                  Real("1e-28", ctx)));
  CHECK(rel_close(constant("zeta3", ctx),
                  Real("1.20205690315959428539973816151", ctx),
                  Real("1e-28", ctx)));
  CHECK(rel_close(constant("pi", ctx),
                  Real("3.14159265358979323846264338328", ctx),
                  Real("1e-28", ctx)));
  CHECK(rel_close(constant("e", ctx), exp(Real(1L, ctx)), Real("1e-29", ctx)));
  CHECK_THROWS_AS(constant("tau", ctx), std::invalid_argument);
}

TEST_CASE("recip_gamma * gamma is 1 to 10 ulps") {
  for (double xd : {0.25, 0.5, 1.5, 2.5, 7.3}) {
    Real x(xd, ctx);
    Real prod = recip_gamma(x, ctx) * gamma(x, ctx);
    CHECK(within_ulps(prod, Real(1L, ctx), 10));
  }
}

TEST_CASE("gamma recurrence on random points") {
  testutil::UniformDraws draws;
  Real tol = pow10(5 - ctx.digits(), ctx);
  for (int i = 0; i < 20; ++i) {
    Real x(draws.next(1e-3, 20.0), ctx);
    Real lhs = gamma(x + 1, ctx);
    Real rhs = x * gamma(x, ctx);
    CHECK(abs(lhs - rhs) <= tol * abs(rhs));
  }
}

TEST_CASE("digamma recurrence on random points") {
  testutil::UniformDraws draws;
  Real tol = pow10(5 - ctx.digits(), ctx);
  for (int i = 0; i < 20; ++i) {
    Real x(draws.next(1e-3, 20.0), ctx);
    Real lhs = digamma(x + 1, ctx) - digamma(x, ctx);
    Real rhs = 1 / x;
    CHECK(abs(lhs - rhs) <= tol * max(Real(1L, ctx), abs(rhs)));
  }
}

TEST_CASE("Real string round trip and ordering") {
  Real a("1.25e-3", ctx);
  CHECK(a.to_double() == doctest::Approx(0.00125));
  CHECK(Real(a.to_string(30), ctx) == a);
  CHECK(Real(2L, ctx) > Real(1L, ctx));
  CHECK_THROWS_AS(Real("not-a-number-at-all!", ctx), std::invalid_argument);
}
