#include "macfrac/real.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace macfrac {

namespace {

mpfr_prec_t combined(const Real& a, const Real& b) {
  return std::max(a.prec(), b.prec());
}

}  // namespace

Real PrecisionContext::eps() const { return pow10(1 - digits_, *this); }
Real PrecisionContext::quad_tol() const { return pow10(10 - digits_, *this); }
Real PrecisionContext::diff_tol() const { return pow10(-digits_ / 2, *this); }

std::string Real::to_string(int sig) const {
  if (sig < 2) sig = 2;
  std::vector<char> buf(static_cast<size_t>(sig) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", sig - 1, v_);
  return std::string(buf.data());
}

Real& Real::operator+=(const Real& rhs) {
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(combined(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(combined(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(combined(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(combined(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.prec());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r(a.prec());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(a.prec());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r(a.prec());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

#define MACFRAC_UNARY(name, mpfr_fn)       \
  Real name(const Real& x) {               \
    Real r(x.prec());                      \
    mpfr_fn(r.raw(), x.raw(), MPFR_RNDN);  \
    return r;                              \
  }

MACFRAC_UNARY(abs, mpfr_abs)
MACFRAC_UNARY(sqrt, mpfr_sqrt)
MACFRAC_UNARY(exp, mpfr_exp)
MACFRAC_UNARY(log, mpfr_log)
MACFRAC_UNARY(sin, mpfr_sin)
MACFRAC_UNARY(cos, mpfr_cos)

#undef MACFRAC_UNARY

Real floor(const Real& x) {
  Real r(x.prec());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

Real pow(const Real& base, const Real& expo) {
  Real r(combined(base, expo));
  mpfr_pow(r.raw(), base.raw(), expo.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, long expo) {
  Real r(base.prec());
  mpfr_pow_si(r.raw(), base.raw(), expo, MPFR_RNDN);
  return r;
}

Real pow10(long e, const PrecisionContext& ctx) {
  Real r(ctx.bits());
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e),
                 MPFR_RNDN);
  if (e < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

}  // namespace macfrac
