#include "macfrac/reconstruct.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "macfrac/special.hpp"

namespace macfrac {

namespace {

void require_continuous(const OrderSpectrum& s, const char* what) {
  if (!s.has_continuous_part()) {
    throw std::logic_error(std::string(what) + ": spectrum '" + s.name() +
                           "' is atomic; correction terms do not apply");
  }
}

Real factorial(long n, const PrecisionContext& ctx) {
  Real r(ctx.bits());
  mpfr_fac_ui(r.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
  return r;
}

Real correction_from_derivative(const Real& kd, int n,
                                const PrecisionContext& ctx) {
  return -bernoulli_even(n, ctx) / factorial(2 * n, ctx) * kd;
}

}  // namespace

Real transform(const OrderSpectrum& s, const Real& x,
               const PrecisionContext& ctx) {
  if (!domain_check(s, x)) {
    throw std::domain_error("transform: x = " + x.to_string(10) +
                            " outside the domain of spectrum '" + s.name() +
                            "'");
  }
  Real acc(0L, ctx);
  if (s.has_continuous_part()) {
    KernelSlice ks(s, x);
    auto result = integrate_semi_infinite(
        [&](const Real& r) { return kernel_eval(ks, r, ctx); }, ctx);
    acc += result.value;
  }
  for (const Atom& atom : s.atoms()) {
    acc += atom.weight * pow(x, atom.order) * recip_gamma(atom.order + 1, ctx);
  }
  return acc;
}

Real correction_term(const OrderSpectrum& s, const Real& x, int n,
                     const PrecisionContext& ctx) {
  require_continuous(s, "correction_term");
  if (n < 0 || n > kDefaultMaxCorrections) {
    throw std::domain_error("correction_term: n outside [0, " +
                            std::to_string(kDefaultMaxCorrections) + "]");
  }
  KernelSlice ks(s, x);
  if (n == 0) return kernel_eval(ks, Real(0L, ctx), ctx) / 2;
  if (s.has_closed_corrections() && n <= 2) {
    Real kd = closed_form_kernel_derivative(s.name(), x, 2 * n - 1, ctx);
    return correction_from_derivative(kd, n, ctx);
  }
  return correction_term_numeric(s, x, n, ctx);
}

Real correction_term_numeric(const OrderSpectrum& s, const Real& x, int n,
                             const PrecisionContext& ctx) {
  require_continuous(s, "correction_term_numeric");
  if (n < 0 || n > kDefaultMaxCorrections) {
    throw std::domain_error("correction_term_numeric: n outside [0, " +
                            std::to_string(kDefaultMaxCorrections) + "]");
  }
  KernelSlice ks(s, x);
  if (n == 0) return kernel_eval(ks, Real(0L, ctx), ctx) / 2;
  Real kd = kernel_derivative_at_zero(ks, 2 * n - 1, ctx);
  return correction_from_derivative(kd, n, ctx);
}

std::vector<Real> correction_series(const OrderSpectrum& s, const Real& x,
                                    int m, const PrecisionContext& ctx) {
  if (m < 0 || m > kDefaultMaxCorrections) {
    throw std::domain_error("correction_series: m outside [0, " +
                            std::to_string(kDefaultMaxCorrections) + "]");
  }
  std::vector<Real> terms;
  terms.reserve(static_cast<size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) terms.push_back(correction_term(s, x, n, ctx));
  return terms;
}

namespace {

// One summation pass at the given precision; also reports the largest
// term magnitude so the caller can detect cancellation.
std::pair<Real, Real> maclaurin_sum_pass(const OrderSpectrum& s, const Real& x,
                                         const PrecisionContext& ctx) {
  const int kMaxTerms = 100000;
  const int kSmallRun = 30;
  const int kGrowthRun = 10;
  Real eps = ctx.eps();
  Real sum(0L, ctx);
  Real xn(1L, ctx);  // x^n
  Real prev_abs(0L, ctx);
  Real max_abs(0L, ctx);
  int small_run = 0;
  int growth_run = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    Real coeff(0L, ctx);
    if (s.has_continuous_part()) {
      coeff = spectrum_eval(s, Real(static_cast<long>(n), ctx), ctx);
    }
    for (const Atom& atom : s.atoms()) {
      if (atom.order == static_cast<long>(n)) coeff += atom.weight;
    }
    Real term = coeff * xn * recip_gamma(Real(static_cast<long>(n + 1), ctx), ctx);
    sum += term;
    Real ta = abs(term);
    max_abs = max(max_abs, ta);
    if (ta < eps * max(Real(1L, ctx), abs(sum))) {
      if (++small_run >= kSmallRun) return {sum, max_abs};
    } else {
      small_run = 0;
    }
    if (!ta.is_zero() && ta > prev_abs && n > 0) {
      if (++growth_run >= kGrowthRun) {
        throw NumericalError("maclaurin_sum: terms grew over " +
                             std::to_string(kGrowthRun) +
                             " consecutive orders; series diverges at x = " +
                             x.to_string(10));
      }
    } else if (!ta.is_zero()) {
      growth_run = 0;
    }
    if (!ta.is_zero()) prev_abs = ta;
    xn *= x;
  }
  throw NumericalError("maclaurin_sum: no convergence after " +
                       std::to_string(kMaxTerms) + " terms");
}

}  // namespace

Real maclaurin_sum(const OrderSpectrum& s, const Real& x,
                   const PrecisionContext& ctx) {
  auto [sum, max_abs] = maclaurin_sum_pass(s, x, ctx);
  // Alternating series can shed leading digits; if the largest term
  // dwarfs the result, redo the pass with enough guard digits to pay
  // for the cancellation and round back to working precision.
  Real scale = max(abs(sum), Real(1L, ctx));
  if (max_abs > scale) {
    Real lost = log(max_abs / scale) / log(Real(10L, ctx));
    long guard = static_cast<long>(mpfr_get_si(lost.raw(), MPFR_RNDU)) + 15;
    guard = std::min(guard, 4L * static_cast<long>(ctx.digits()));
    PrecisionContext inner(ctx.digits() + static_cast<int>(guard));
    Real xi(inner.bits());
    mpfr_set(xi.raw(), x.raw(), MPFR_RNDN);
    sum = maclaurin_sum_pass(s, xi, inner).first;
    Real out(ctx.bits());
    mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
    return out;
  }
  return sum;
}

ReconstructionResult reconstruct_point(const OrderSpectrum& s, const Real& x,
                                       int m, const PrecisionContext& ctx) {
  ReconstructionResult res;
  res.x = x;
  res.transform = transform(s, x, ctx);
  res.truth = reference_value(s, x, ctx);
  if (s.has_continuous_part()) {
    res.corrections = correction_series(s, x, m, ctx);
    res.m = m;
  }
  res.corrected = res.transform;
  for (const Real& e : res.corrections) res.corrected += e;
  res.residual_raw = res.truth - res.transform;
  res.residual_corrected = res.truth - res.corrected;
  return res;
}

}  // namespace macfrac
