#include "macfrac/special.hpp"

#include <gmpxx.h>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace macfrac {

Real gamma(const Real& x, const PrecisionContext& ctx) {
  if (!(x > 0)) {
    throw std::domain_error("gamma: argument must be positive, got " +
                            x.to_string(10));
  }
  Real r(ctx.bits());
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real recip_gamma(const Real& x, const PrecisionContext& ctx) {
  if (x <= 0 && x.is_integer()) return Real(0L, ctx);
  Real g(ctx.bits());
  mpfr_gamma(g.raw(), x.raw(), MPFR_RNDN);
  Real r(ctx.bits());
  mpfr_si_div(r.raw(), 1, g.raw(), MPFR_RNDN);
  return r;
}

Real digamma(const Real& x, const PrecisionContext& ctx) {
  if (!(x > 0)) {
    throw std::domain_error("digamma: argument must be positive, got " +
                            x.to_string(10));
  }
  Real r(ctx.bits());
  mpfr_digamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real bessel_j0(const Real& x, const PrecisionContext& ctx, double max_abs_x) {
  double xd = std::fabs(x.to_double());
  if (xd > max_abs_x) {
    throw std::range_error("bessel_j0: |x| exceeds the configured maximum " +
                           std::to_string(max_abs_x));
  }
  // The largest series term is ~e^{|x|}, so alternating cancellation costs
  // about x*log10(e) digits; work with that many guard digits.
  int guard = static_cast<int>(std::ceil(xd * 0.4342944819032518)) + 10;
  PrecisionContext inner(ctx.digits() + guard);

  Real q(inner.bits());
  mpfr_set(q.raw(), x.raw(), MPFR_RNDN);
  Real half_sq = (q / 2) * (q / 2);

  Real sum(1L, inner);
  Real term(1L, inner);
  Real tol = inner.eps();
  for (long n = 1; n < 100000; ++n) {
    term = -term * half_sq / n / n;
    sum += term;
    if (abs(term) < tol) break;
  }
  Real out(ctx.bits());
  mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
  return out;
}

namespace {

// Exact Bernoulli numbers via B_m = -(1/(m+1)) sum_{k<m} C(m+1,k) B_k.
const mpq_class& bernoulli_rational(int m) {
  static std::vector<mpq_class> cache{mpq_class(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= m) {
    int mm = static_cast<int>(cache.size());
    mpq_class acc(0);
    for (int k = 0; k < mm; ++k) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned>(mm + 1),
                   static_cast<unsigned>(k));
      acc += mpq_class(binom) * cache[k];
    }
    acc /= -(mm + 1);
    acc.canonicalize();
    cache.push_back(acc);
  }
  return cache[m];
}

}  // namespace

Real bernoulli_even(int n, const PrecisionContext& ctx, int max_n) {
  if (n < 0) throw std::domain_error("bernoulli_even: n must be >= 0");
  if (n > max_n) {
    throw std::range_error("bernoulli_even: n exceeds the configured maximum " +
                           std::to_string(max_n));
  }
  const mpq_class& b = bernoulli_rational(2 * n);
  Real r(ctx.bits());
  mpfr_set_q(r.raw(), b.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real constant(const std::string& name, const PrecisionContext& ctx) {
  Real r(ctx.bits());
  if (name == "pi") {
    mpfr_const_pi(r.raw(), MPFR_RNDN);
  } else if (name == "euler_gamma") {
    mpfr_const_euler(r.raw(), MPFR_RNDN);
  } else if (name == "zeta3") {
    mpfr_zeta_ui(r.raw(), 3, MPFR_RNDN);
  } else if (name == "e") {
    mpfr_set_si(r.raw(), 1, MPFR_RNDN);
    mpfr_exp(r.raw(), r.raw(), MPFR_RNDN);
  } else {
    throw std::invalid_argument("constant: unknown name '" + name + "'");
  }
  return r;
}

}  // namespace macfrac
