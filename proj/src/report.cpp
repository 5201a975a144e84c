#include "macfrac/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace macfrac {

GridReport sweep_grid(const OrderSpectrum& s, const Real& a, const Real& b,
                      int npoints, int m, const PrecisionContext& ctx) {
  if (!(a > 0) || !(b > a)) {
    throw std::invalid_argument("sweep_grid: need 0 < a < b");
  }
  if (npoints < 2) throw std::invalid_argument("sweep_grid: npoints must be >= 2");

  GridReport report;
  report.spectrum_name = s.name();
  report.a = a;
  report.b = b;
  report.npoints = npoints;
  report.m = s.has_continuous_part() ? m : -1;
  report.rows.reserve(static_cast<size_t>(npoints));

  Real step = (b - a) / (npoints - 1);
  for (int i = 0; i < npoints; ++i) {
    Real x = a + i * step;
    try {
      report.rows.push_back(reconstruct_point(s, x, m, ctx));
    } catch (const std::exception& e) {
      throw std::runtime_error("sweep_grid: failure at x = " +
                               x.to_string(10) + ": " + e.what());
    }
  }
  auto [raw, corrected] = mean_absolute_errors(report);
  report.mae_raw = raw;
  report.mae_corrected = corrected;
  return report;
}

std::pair<Real, Real> mean_absolute_errors(const GridReport& report) {
  if (report.rows.empty()) {
    throw std::invalid_argument("mean_absolute_errors: empty report");
  }
  mpfr_prec_t prec = report.rows.front().x.prec();
  Real raw(0L, prec);
  Real corrected(0L, prec);
  for (const auto& row : report.rows) {
    raw += abs(row.residual_raw);
    corrected += abs(row.residual_corrected);
  }
  long n = static_cast<long>(report.rows.size());
  return {raw / n, corrected / n};
}

void write_csv(const GridReport& report, const std::string& path,
               int sig_digits) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_csv: cannot open '" + path + "'");

  out << "x,f_true,transform";
  for (int n = 0; n <= report.m; ++n) out << ",e" << n;
  out << ",corrected,resid_raw,resid_corrected\n";

  for (const auto& row : report.rows) {
    out << row.x.to_string(sig_digits) << ',' << row.truth.to_string(sig_digits)
        << ',' << row.transform.to_string(sig_digits);
    for (const Real& e : row.corrections) out << ',' << e.to_string(sig_digits);
    out << ',' << row.corrected.to_string(sig_digits) << ','
        << row.residual_raw.to_string(sig_digits) << ','
        << row.residual_corrected.to_string(sig_digits) << '\n';
  }
  out << "# mae_raw=" << report.mae_raw.to_string(sig_digits)
      << ",mae_corrected=" << report.mae_corrected.to_string(sig_digits)
      << '\n';
  if (!out) throw std::runtime_error("write_csv: write failed for '" + path + "'");
}

namespace {

struct PanelScale {
  double lo, hi;
  double map(double v, double y0, double y1) const {
    if (hi == lo) return (y0 + y1) / 2;
    return y1 - (v - lo) / (hi - lo) * (y1 - y0);
  }
};

std::string polyline(const std::vector<double>& xs,
                     const std::vector<double>& ys, double x0, double x1,
                     double xlo, double xhi, const PanelScale& scale,
                     double y0, double y1, const char* color) {
  std::ostringstream p;
  p << "<polyline fill=\"none\" stroke=\"" << color
    << "\" stroke-width=\"1.5\" points=\"";
  for (size_t i = 0; i < xs.size(); ++i) {
    double px = x0 + (xs[i] - xlo) / (xhi - xlo) * (x1 - x0);
    p << px << ',' << scale.map(ys[i], y0, y1) << ' ';
  }
  p << "\"/>\n";
  return p.str();
}

}  // namespace

void write_svg(const GridReport& report, const std::string& path,
               int floor_exponent) {
  if (report.rows.size() < 2) {
    throw std::invalid_argument("write_svg: need at least 2 grid points");
  }
  const double W = 960, H = 420;
  const double x0a = 60, x1a = 460, x0b = 560, x1b = 920;
  const double y0 = 40, y1 = 380;

  std::vector<double> xs, truth, corrected, trans, lraw, lcorr;
  const double floor_log = floor_exponent;
  for (const auto& row : report.rows) {
    xs.push_back(row.x.to_double());
    truth.push_back(row.truth.to_double());
    corrected.push_back(row.corrected.to_double());
    trans.push_back(row.transform.to_double());
    auto log_mag = [&](const Real& v) {
      double a = std::abs(v.to_double());
      return a > 0 ? std::max(std::log10(a), floor_log) : floor_log;
    };
    lraw.push_back(log_mag(row.residual_raw));
    lcorr.push_back(log_mag(row.residual_corrected));
  }
  double xlo = xs.front(), xhi = xs.back();

  auto span = [](std::initializer_list<const std::vector<double>*> series) {
    PanelScale s{1e300, -1e300};
    for (const auto* v : series) {
      for (double t : *v) {
        s.lo = std::min(s.lo, t);
        s.hi = std::max(s.hi, t);
      }
    }
    return s;
  };
  PanelScale left = span({&truth, &corrected, &trans});
  PanelScale right = span({&lraw, &lcorr});

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_svg: cannot open '" + path + "'");
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H
      << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H
      << "\" fill=\"white\"/>\n";

  // panel frames
  for (auto [px0, px1] : {std::pair{x0a, x1a}, std::pair{x0b, x1b}}) {
    out << "<rect x=\"" << px0 << "\" y=\"" << y0 << "\" width=\""
        << (px1 - px0) << "\" height=\"" << (y1 - y0)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
  }

  out << polyline(xs, truth, x0a, x1a, xlo, xhi, left, y0, y1, "black");
  out << polyline(xs, corrected, x0a, x1a, xlo, xhi, left, y0, y1, "#1f77b4");
  out << polyline(xs, trans, x0a, x1a, xlo, xhi, left, y0, y1, "#d62728");
  out << polyline(xs, lraw, x0b, x1b, xlo, xhi, right, y0, y1, "#d62728");
  out << polyline(xs, lcorr, x0b, x1b, xlo, xhi, right, y0, y1, "#1f77b4");

  out << "<text x=\"" << (x0a + x1a) / 2 << "\" y=\"25\" text-anchor=\"middle\">"
      << report.spectrum_name
      << ": truth (black), corrected (blue), transform (red)</text>\n";
  out << "<text x=\"" << (x0b + x1b) / 2 << "\" y=\"25\" text-anchor=\"middle\">"
      << "log10 |residual|: raw (red), corrected (blue)</text>\n";
  out << "<text x=\"" << (x0a + x1a) / 2 << "\" y=\"" << (H - 8)
      << "\" text-anchor=\"middle\">x</text>\n";
  out << "<text x=\"" << (x0b + x1b) / 2 << "\" y=\"" << (H - 8)
      << "\" text-anchor=\"middle\">x</text>\n";
  out << "<text x=\"" << x0b << "\" y=\"" << (y1 + 25) << "\">mae_raw="
      << report.mae_raw.to_string(6) << " mae_corrected="
      << report.mae_corrected.to_string(6) << "</text>\n";
  out << "</svg>\n";
  if (!out) throw std::runtime_error("write_svg: write failed for '" + path + "'");
}

SweepDefaults default_interval(const std::string& spectrum_name) {
  if (spectrum_name == "exp") return {0.5, 2.5};
  if (spectrum_name == "geom") return {0.05, 0.9};
  if (spectrum_name == "sin") return {0.5, 6.0};
  if (spectrum_name == "expsq") return {0.2, 1.5};
  if (spectrum_name == "gauss") return {0.2, 3.0};
  if (spectrum_name == "besselj0") return {0.5, 6.0};
  if (spectrum_name.rfind("monomial:", 0) == 0) return {0.5, 2.0};
  throw std::invalid_argument("default_interval: unknown spectrum '" +
                              spectrum_name + "'");
}

}  // namespace macfrac
