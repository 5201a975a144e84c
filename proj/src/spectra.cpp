#include "macfrac/spectra.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

#include "macfrac/special.hpp"

namespace macfrac {

Real OrderSpectrum::eval(const Real& r, const PrecisionContext& ctx) const {
  if (!continuous_) {
    throw std::logic_error("spectrum '" + name_ +
                           "' is purely atomic and has no continuous part");
  }
  if (r < Real(r_min_, ctx)) {
    throw std::domain_error("spectrum '" + name_ + "': order " +
                            r.to_string(10) + " below r_min");
  }
  return continuous_(r, ctx);
}

Real OrderSpectrum::reference_value(const Real& x,
                                    const PrecisionContext& ctx) const {
  return reference_(x, ctx);
}

namespace {

Real half_pi_r(const Real& r, const PrecisionContext& ctx) {
  return constant("pi", ctx) * r / 2;
}

// Gamma(r+1)/Gamma(r/2+1), finite on r >= -1/2.
Real gamma_ratio(const Real& r, const PrecisionContext& ctx) {
  return gamma(r + 1, ctx) / gamma(r / 2 + 1, ctx);
}

OrderSpectrum make_monomial(int k) {
  if (k < 0) throw std::domain_error("monomial: k must be a non-negative integer");
  PrecisionContext ctx(40);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned>(k));
  Real weight(static_cast<mpfr_prec_t>(
      std::max<size_t>(64, mpz_sizeinbase(fact.get_mpz_t(), 2) + 8)));
  mpfr_set_z(weight.raw(), fact.get_mpz_t(), MPFR_RNDN);
  std::vector<Atom> atoms{{Real(static_cast<long>(k), ctx), weight}};
  return OrderSpectrum(
      "monomial:" + std::to_string(k), nullptr, std::move(atoms), Interval{},
      [k](const Real& x, const PrecisionContext&) { return pow(x, static_cast<long>(k)); },
      /*has_closed_corrections=*/false);
}

}  // namespace

OrderSpectrum builtin_spectrum(const std::string& name) {
  if (name == "exp") {
    return OrderSpectrum(
        "exp",
        [](const Real&, const PrecisionContext& ctx) { return Real(1L, ctx); },
        {}, Interval{},
        [](const Real& x, const PrecisionContext&) { return exp(x); },
        /*has_closed_corrections=*/true);
  }
  if (name == "geom") {
    return OrderSpectrum(
        "geom",
        [](const Real& r, const PrecisionContext& ctx) {
          return gamma(r + 1, ctx);
        },
        {}, Interval{0.0, 1.0},
        [](const Real& x, const PrecisionContext& ctx) {
          if (x == 1) throw std::domain_error("geom: pole at x = 1");
          return Real(1L, ctx) / (1 - x);
        },
        /*has_closed_corrections=*/true);
  }
  if (name == "sin") {
    return OrderSpectrum(
        "sin",
        [](const Real& r, const PrecisionContext& ctx) {
          return sin(half_pi_r(r, ctx));
        },
        {}, Interval{},
        [](const Real& x, const PrecisionContext&) { return sin(x); },
        /*has_closed_corrections=*/true);
  }
  if (name == "expsq") {
    return OrderSpectrum(
        "expsq",
        [](const Real& r, const PrecisionContext& ctx) {
          Real c = cos(half_pi_r(r, ctx));
          return gamma_ratio(r, ctx) * c * c;
        },
        {}, Interval{},
        [](const Real& x, const PrecisionContext&) { return exp(x * x); },
        /*has_closed_corrections=*/false);
  }
  if (name == "gauss") {
    return OrderSpectrum(
        "gauss",
        [](const Real& r, const PrecisionContext& ctx) {
          return gamma_ratio(r, ctx) * cos(half_pi_r(r, ctx));
        },
        {}, Interval{},
        [](const Real& x, const PrecisionContext&) { return exp(-(x * x)); },
        /*has_closed_corrections=*/false);
  }
  if (name == "besselj0") {
    return OrderSpectrum(
        "besselj0",
        [](const Real& r, const PrecisionContext& ctx) {
          Real gh = gamma(r / 2 + 1, ctx);
          return gamma(r + 1, ctx) / (pow(Real(2L, ctx), r) * gh * gh) *
                 cos(half_pi_r(r, ctx));
        },
        {}, Interval{},
        [](const Real& x, const PrecisionContext& ctx) {
          return bessel_j0(x, ctx);
        },
        /*has_closed_corrections=*/false);
  }
  if (name.rfind("monomial:", 0) == 0) {
    const std::string arg = name.substr(9);
    size_t pos = 0;
    int k = -1;
    try {
      k = std::stoi(arg, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("monomial: bad degree '" + arg + "'");
    }
    if (pos != arg.size() || k < 0) {
      throw std::invalid_argument("monomial: degree must be a non-negative integer, got '" +
                                  arg + "'");
    }
    return make_monomial(k);
  }
  throw std::invalid_argument("unknown spectrum '" + name + "'");
}

std::vector<std::string> builtin_spectrum_names() {
  return {"exp", "geom", "sin", "expsq", "gauss", "besselj0", "monomial:k"};
}

bool domain_check(const OrderSpectrum& s, const Real& x) {
  return s.x_domain().contains(x);
}

Real spectrum_eval(const OrderSpectrum& s, const Real& r,
                   const PrecisionContext& ctx) {
  return s.eval(r, ctx);
}

Real reference_value(const OrderSpectrum& s, const Real& x,
                     const PrecisionContext& ctx) {
  return s.reference_value(x, ctx);
}

}  // namespace macfrac
