#pragma once

// Arbitrary-precision real arithmetic on top of MPFR.
//
// Every computation in this library is parameterized by a PrecisionContext
// carrying the working precision in decimal digits plus the derived
// tolerances used by the quadrature and differentiation layers.

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace macfrac {

class Real;

/// Working precision (decimal digits) and the tolerances derived from it.
class PrecisionContext {
 public:
  explicit PrecisionContext(int digits = 100) : digits_(digits) {
    if (digits < 20) {
      throw std::invalid_argument(
          "PrecisionContext: digits must be >= 20 (got " +
          std::to_string(digits) + ")");
    }
  }

  int digits() const { return digits_; }

  /// Binary precision equivalent, with guard bits.
  mpfr_prec_t bits() const {
    return static_cast<mpfr_prec_t>(digits_ * 3.3219280948873623) + 32;
  }

  Real eps() const;       // 10^(1-digits)
  Real quad_tol() const;  // 10^(10-digits)
  Real diff_tol() const;  // 10^(-digits/2)

  /// Context with precision scaled by an integer factor (internal guard
  /// precision for cancellation-prone steps).
  PrecisionContext elevated(int factor) const {
    return PrecisionContext(digits_ * factor);
  }

 private:
  int digits_;
};

/// RAII value type over mpfr_t. Binary operations produce results at the
/// larger of the two operand precisions; mpfr rounds to nearest.
class Real {
 public:
  Real() : Real(static_cast<mpfr_prec_t>(64)) {}

  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }

  Real(long value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
  }

  Real(long value, const PrecisionContext& ctx) : Real(value, ctx.bits()) {}

  Real(double value, const PrecisionContext& ctx) {
    mpfr_init2(v_, ctx.bits());
    mpfr_set_d(v_, value, MPFR_RNDN);
  }

  Real(const std::string& decimal, const PrecisionContext& ctx) {
    mpfr_init2(v_, ctx.bits());
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_clear(v_);
      throw std::invalid_argument("Real: unparsable literal '" + decimal +
                                  "'");
    }
  }

  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }

  Real(Real&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
  }

  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Nearest integer as long; throws if not representable.
  long to_long() const {
    if (!mpfr_fits_slong_p(v_, MPFR_RNDN)) {
      throw std::range_error("Real: value does not fit in long");
    }
    return mpfr_get_si(v_, MPFR_RNDN);
  }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Scientific-notation decimal string with `sig` significant digits.
  std::string to_string(int sig = 30) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(long a, const Real& b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_cmp(a.v_, b.v_) == 0;
  }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) {
    return mpfr_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }

  friend bool operator==(const Real& a, long b) {
    return mpfr_cmp_si(a.v_, b) == 0;
  }
  friend bool operator<(const Real& a, long b) {
    return mpfr_cmp_si(a.v_, b) < 0;
  }
  friend bool operator>(const Real& a, long b) {
    return mpfr_cmp_si(a.v_, b) > 0;
  }
  friend bool operator<=(const Real& a, long b) { return !(a > b); }
  friend bool operator>=(const Real& a, long b) { return !(a < b); }

 private:
  mpfr_t v_;
};

// Elementary functions; the result carries the argument's precision.
Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real pow(const Real& base, const Real& expo);
Real pow(const Real& base, long expo);
Real floor(const Real& x);

/// 10^e at the context precision.
Real pow10(long e, const PrecisionContext& ctx);

/// max(a, b) by value.
Real max(const Real& a, const Real& b);

}  // namespace macfrac
