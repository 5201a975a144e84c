#pragma once

// Grid sweeps over an interval, MAE aggregation, and CSV/SVG emission.

#include <string>
#include <vector>

#include "macfrac/real.hpp"
#include "macfrac/reconstruct.hpp"
#include "macfrac/spectra.hpp"

namespace macfrac {

struct GridReport {
  std::string spectrum_name;
  Real a;
  Real b;
  int npoints = 0;
  int m = -1;  // -1 for atomic spectra (no correction columns)
  std::vector<ReconstructionResult> rows;
  Real mae_raw;
  Real mae_corrected;
};

/// Reconstruct on the uniform grid x_i = a + i (b-a)/(npoints-1) and
/// aggregate mean absolute errors.
GridReport sweep_grid(const OrderSpectrum& s, const Real& a, const Real& b,
                      int npoints, int m, const PrecisionContext& ctx);

/// (mae_raw, mae_corrected), recomputed from the rows.
std::pair<Real, Real> mean_absolute_errors(const GridReport& report);

/// CSV: header `x,f_true,transform,e0,...,em,corrected,resid_raw,
/// resid_corrected` (e-columns absent for atomic spectra), one row per node,
/// then a `# mae_raw=...,mae_corrected=...` comment line.
void write_csv(const GridReport& report, const std::string& path,
               int sig_digits = 30);

/// Standalone two-panel SVG 1.1 document: reconstruction polylines and
/// log-magnitude residual polylines, with MAE annotations.
void write_svg(const GridReport& report, const std::string& path,
               int floor_exponent = -100);

/// Default acceptance interval per family (declared, not paper-derived).
struct SweepDefaults {
  double a;
  double b;
};
SweepDefaults default_interval(const std::string& spectrum_name);

}  // namespace macfrac
