// macfrac: continuous-order Maclaurin transform CLI.
//
// Subcommands:
//   list        built-in spectra with domains and correction availability
//   reconstruct single-point reconstruction table
//   sweep       grid sweep, CSV or SVG artifact, MAEs on stdout
//   validate    built-in oracle suite
//
// Exit codes: 0 ok, 1 usage, 2 domain error, 3 numerical failure,
// 4 validation failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "macfrac/report.hpp"
#include "macfrac/special.hpp"

namespace {

using namespace macfrac;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitValidation = 4;

struct Options {
  std::string function;
  int digits = 100;
  int corrections = 2;
  double x = 0.0;
  bool have_x = false;
  double xmin = 0.0, xmax = 0.0;
  int points = 41;
  bool have_interval = false;
  std::string output;
  std::string format = "table";
};

void print_reconstruction(const ReconstructionResult& r, int sig) {
  std::cout << "x                 = " << r.x.to_string(sig) << '\n'
            << "transform         = " << r.transform.to_string(sig) << '\n';
  for (size_t n = 0; n < r.corrections.size(); ++n) {
    std::cout << "e" << n << "                = "
              << r.corrections[n].to_string(sig) << '\n';
  }
  std::cout << "corrected         = " << r.corrected.to_string(sig) << '\n'
            << "truth             = " << r.truth.to_string(sig) << '\n'
            << "resid_raw         = " << r.residual_raw.to_string(sig) << '\n'
            << "resid_corrected   = " << r.residual_corrected.to_string(sig)
            << '\n';
}

int cmd_list() {
  struct Row {
    const char* name;
    const char* domain;
    const char* corrections;
  };
  const Row rows[] = {
      {"exp", "(0, inf)", "closed-form (E1, E2) + numeric"},
      {"geom", "(0, 1)", "closed-form (E1, E2) + numeric"},
      {"sin", "(0, inf)", "closed-form (E1, E2) + numeric"},
      {"expsq", "(0, inf)", "numeric"},
      {"gauss", "(0, inf)", "numeric"},
      {"besselj0", "(0, inf)", "numeric"},
      {"monomial:k", "(0, inf)", "n/a (atomic, exact)"},
  };
  for (const auto& r : rows) {
    std::cout << r.name << "\tdomain " << r.domain << "\tcorrections: "
              << r.corrections << '\n';
  }
  return 0;
}

int cmd_reconstruct(const Options& opt) {
  PrecisionContext ctx(opt.digits);
  OrderSpectrum s = builtin_spectrum(opt.function);
  Real x(opt.x, ctx);
  auto r = reconstruct_point(s, x, opt.corrections, ctx);
  print_reconstruction(r, 15);
  return 0;
}

int cmd_sweep(const Options& opt) {
  PrecisionContext ctx(opt.digits);
  OrderSpectrum s = builtin_spectrum(opt.function);
  double a = opt.xmin, b = opt.xmax;
  if (!opt.have_interval) {
    auto d = default_interval(opt.function);
    a = d.a;
    b = d.b;
  }
  GridReport report = sweep_grid(s, Real(a, ctx), Real(b, ctx), opt.points,
                                 opt.corrections, ctx);
  if (!opt.output.empty()) {
    if (opt.format == "svg") {
      write_svg(report, opt.output, -ctx.digits());
    } else {
      write_csv(report, opt.output);
    }
  }
  std::cout << "mae_raw=" << report.mae_raw.to_string(15)
            << " mae_corrected=" << report.mae_corrected.to_string(15) << '\n';
  return 0;
}

struct Check {
  std::string name;
  bool passed;
};

int cmd_validate(int digits, bool inject_fault) {
  PrecisionContext ctx(digits);
  std::vector<Check> checks;
  auto run = [&](const std::string& name, auto&& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception&) {
      ok = false;
    }
    checks.push_back({name, ok});
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << '\n';
  };

  Real tol_corr = pow10(-(digits / 2) + 5, ctx);

  run("closed-form vs numeric corrections (exp/geom/sin)", [&] {
    for (const char* name : {"exp", "geom", "sin"}) {
      OrderSpectrum s = builtin_spectrum(name);
      for (double xd : {0.3, 0.5, 0.7, 0.9}) {
        Real x(xd, ctx);
        for (int n : {1, 2}) {
          Real closed = correction_term(s, x, n, ctx);
          Real numeric = correction_term_numeric(s, x, n, ctx);
          if (!(abs(closed - numeric) <= tol_corr)) return false;
        }
      }
    }
    return true;
  });

  run("geom transform equals -1/ln x", [&] {
    OrderSpectrum geom = builtin_spectrum("geom");
    Real tol = pow10(20 - digits, ctx);
    for (double xd : {0.2, 0.5, 0.9}) {
      Real x(xd, ctx);
      if (!(abs(transform(geom, x, ctx) + 1 / log(x)) <= tol)) return false;
    }
    return true;
  });

  run("monomial exactness", [&] {
    Real tol = 10 * ctx.eps();
    for (int k : {0, 1, 2, 3}) {
      OrderSpectrum s = builtin_spectrum("monomial:" + std::to_string(k));
      for (double xd : {0.5, 1.0, 2.0}) {
        auto r = reconstruct_point(s, Real(xd, ctx), 0, ctx);
        Real scale = max(Real(1L, ctx), abs(r.truth));
        if (!(abs(r.residual_corrected) <= tol * scale)) return false;
      }
    }
    return true;
  });

  run("sum-integral consistency (geom at x = 1/e)", [&] {
    OrderSpectrum geom = builtin_spectrum("geom");
    Real x = 1 / constant("e", ctx);
    Real gap = maclaurin_sum(geom, x, ctx) - transform(geom, x, ctx);
    Real esum(0L, ctx);
    for (const Real& e : correction_series(geom, x, 2, ctx)) esum += e;
    return abs(gap - esum) <= Real(1e-4, ctx);
  });

  if (inject_fault) {
    run("registry fault injection", [&] { return false; });
  }

  for (const auto& c : checks) {
    if (!c.passed) return kExitValidation;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continuous-order Maclaurin transform toolkit"};
  app.require_subcommand(1);

  Options opt;
  bool inject_fault = false;
  std::vector<CLI::Option*> digit_opts;

  auto* list = app.add_subcommand("list", "list built-in spectra");

  auto add_common = [&](CLI::App* cmd, bool need_function) {
    auto* f = cmd->add_option("--function", opt.function,
                              "spectrum name (monomial takes monomial:k)");
    if (need_function) f->required();
    digit_opts.push_back(
        cmd->add_option("--digits", opt.digits,
                        "working precision in decimal digits (env MACFRAC_DIGITS)")
            ->check(CLI::Range(20, 100000)));
    cmd->add_option("--corrections", opt.corrections,
                    "number of correction terms m")
        ->check(CLI::Range(0, 5));
  };

  auto* rec = app.add_subcommand("reconstruct", "reconstruct f at one point");
  add_common(rec, true);
  rec->add_option("--x", opt.x, "evaluation point")->required();

  auto* sweep = app.add_subcommand("sweep", "grid sweep with CSV/SVG output");
  add_common(sweep, true);
  auto* oxmin = sweep->add_option("--xmin", opt.xmin, "interval start");
  auto* oxmax = sweep->add_option("--xmax", opt.xmax, "interval end");
  oxmin->needs(oxmax);
  oxmax->needs(oxmin);
  sweep->add_option("--points", opt.points, "grid size")->check(CLI::Range(2, 1000000));
  sweep->add_option("--output", opt.output, "artifact path");
  sweep->add_option("--format", opt.format, "table|csv|svg")
      ->check(CLI::IsMember({"table", "csv", "svg"}));

  auto* validate = app.add_subcommand("validate", "run the built-in oracle suite");
  digit_opts.push_back(validate->add_option("--digits", opt.digits, "working precision")
                           ->check(CLI::Range(20, 100000)));
  validate->add_flag("--inject-fault", inject_fault)->group("");  // test hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  // env var MACFRAC_DIGITS applies unless an explicit --digits flag is given
  bool digits_flagged = false;
  for (const CLI::Option* o : digit_opts) digits_flagged |= o->count() > 0;
  if (!digits_flagged) {
    if (const char* env = std::getenv("MACFRAC_DIGITS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || v < 20 || v > 100000) {
        std::cerr << "usage error: MACFRAC_DIGITS must be an integer in [20, 100000], got '"
                  << env << "'\n";
        return kExitUsage;
      }
      opt.digits = static_cast<int>(v);
    }
  }

  try {
    if (list->parsed()) return cmd_list();
    if (rec->parsed()) return cmd_reconstruct(opt);
    if (sweep->parsed()) {
      opt.have_interval = oxmin->count() > 0;
      return cmd_sweep(opt);
    }
    if (validate->parsed()) return cmd_validate(opt.digits, inject_fault);
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const CLI::Error&) {
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
