#pragma once

// Order spectra: the order-dependent derivative data r -> D^r f(0) driving
// the continuous-order transform, together with ground-truth evaluators.

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "macfrac/real.hpp"

namespace macfrac {

/// Point mass in the order spectrum: weight concentrated at a single order.
struct Atom {
  Real order;   // >= 0
  Real weight;  // finite, nonzero
};

/// Open interval of valid evaluation points (hi may be +infinity).
struct Interval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();

  bool contains(const Real& x) const {
    PrecisionContext c(20);
    if (!(x > Real(lo, c))) return false;
    if (std::isinf(hi)) return true;
    return x < Real(hi, c);
  }
};

class OrderSpectrum {
 public:
  using OrderFn = std::function<Real(const Real&, const PrecisionContext&)>;
  using PointFn = std::function<Real(const Real&, const PrecisionContext&)>;

  OrderSpectrum(std::string name, OrderFn continuous_part,
                std::vector<Atom> atoms, Interval x_domain,
                PointFn reference_eval, bool has_closed_corrections,
                double r_min = -0.5)
      : name_(std::move(name)),
        continuous_(std::move(continuous_part)),
        atoms_(std::move(atoms)),
        x_domain_(x_domain),
        reference_(std::move(reference_eval)),
        closed_corrections_(has_closed_corrections),
        r_min_(r_min) {}

  const std::string& name() const { return name_; }
  bool has_continuous_part() const { return static_cast<bool>(continuous_); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const Interval& x_domain() const { return x_domain_; }
  bool has_closed_corrections() const { return closed_corrections_; }
  double r_min() const { return r_min_; }

  /// Continuous part at order r (r >= r_min).
  Real eval(const Real& r, const PrecisionContext& ctx) const;

  /// Ground truth f(x).
  Real reference_value(const Real& x, const PrecisionContext& ctx) const;

 private:
  std::string name_;
  OrderFn continuous_;
  std::vector<Atom> atoms_;
  Interval x_domain_;
  PointFn reference_;
  bool closed_corrections_;
  double r_min_;
};

/// Built-in families: exp, geom, sin, expsq, gauss, besselj0, monomial:k.
OrderSpectrum builtin_spectrum(const std::string& name);

/// Names of all built-ins, monomial rendered as "monomial:k".
std::vector<std::string> builtin_spectrum_names();

bool domain_check(const OrderSpectrum& s, const Real& x);

Real spectrum_eval(const OrderSpectrum& s, const Real& r,
                   const PrecisionContext& ctx);

Real reference_value(const OrderSpectrum& s, const Real& x,
                     const PrecisionContext& ctx);

}  // namespace macfrac
