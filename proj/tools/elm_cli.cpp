// Command-line front end: point evaluation, CSV grid scans, randomized
// verification of the power-mean inequality, and estimation of the
// constant C = max H.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "elm/analysis.hpp"
#include "elm/elliptic.hpp"
#include "elm/mean_lab.hpp"

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

// 17 significant digits: enough for exact binary64 round-trip, so golden
// files compare byte-identically.
std::string format17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double eval_named(const std::string& name, double r,
                  std::optional<double> c_param,
                  std::optional<double> lambda) {
  using elm::Modulus;
  const Modulus m = Modulus::from_r(r);
  if (name == "K") return elm::ellint_k(m);
  if (name == "E") return elm::ellint_e(m);
  if (name == "Kp") return elm::ellint_k(m.complement());
  if (name == "Ep") return elm::ellint_e(m.complement());
  if (name == "m") return elm::m_func(m);
  if (name == "f1") return elm::f1(m);
  if (name == "f2") return elm::f2(m);
  if (name == "f3") {
    if (!c_param) throw elm::ParamError("f3 requires --c");
    return elm::f3(m, *c_param);
  }
  if (name == "f4") return elm::f4(m);
  if (name == "g") return elm::g_func(m);
  if (name == "H") return elm::critical_order(m);
  if (name == "h") {
    if (!lambda) throw elm::ParamError("h requires --lambda");
    return elm::h_func(m, elm::MeanOrder{*lambda});
  }
  throw elm::ParamError("unknown function: " + name);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ELM_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Special-function lab for the modular function m(r): "
               "elliptic integrals, the critical-order function H, and "
               "power-mean inequality verification"};
  app.require_subcommand(1);

  const std::string fn_names = "one of K,E,Kp,Ep,m,f1,f2,f3,f4,g,H,h";

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a function at one point");
  std::string eval_fn;
  double eval_r = 0.0;
  std::optional<double> eval_c, eval_lambda;
  eval->add_option("function", eval_fn, fn_names)->required();
  eval->add_option("r", eval_r, "modulus")->required();
  eval->add_option("--c", eval_c, "exponent for f3");
  eval->add_option("--lambda", eval_lambda, "mean order for h");

  // scan
  auto* scan = app.add_subcommand("scan", "Write a uniform grid scan as CSV");
  std::string scan_fn, scan_out = "-";
  double scan_from = 0.0, scan_to = 0.0;
  std::int64_t scan_points = 0;
  std::optional<double> scan_c, scan_lambda;
  scan->add_option("function", scan_fn, fn_names)->required();
  scan->add_option("from", scan_from, "first modulus")->required();
  scan->add_option("to", scan_to, "last modulus")->required();
  scan->add_option("points", scan_points, "grid size (>= 2)")->required();
  scan->add_option("--c", scan_c, "exponent for f3");
  scan->add_option("--lambda", scan_lambda, "mean order for h");
  scan->add_option("-o,--output", scan_out, "output file, '-' for stdout");

  // estimate-c
  auto* est = app.add_subcommand("estimate-c",
                                 "Estimate C = max H(r) over (0,1]");
  std::int64_t est_points = 1001;
  double est_tol = 1e-9;
  est->add_option("--points", est_points, "initial scan resolution");
  est->add_option("--tol", est_tol, "stability tolerance for C");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Randomized check of the power-mean inequality for m(r)");
  double verify_lambda = 0.0;
  std::string verify_dir = "forward";
  std::int64_t verify_samples = 10000;
  std::uint64_t verify_seed = default_seed();
  verify->add_option("--lambda", verify_lambda, "mean order")->required();
  verify->add_option("--direction", verify_dir, "forward or reverse")
      ->check(CLI::IsMember({"forward", "reverse"}));
  verify->add_option("--samples", verify_samples, "sample count");
  verify->add_option("--seed", verify_seed,
                     "RNG seed (default: ELM_SEED or 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*eval) {
    std::cout << format17(eval_named(eval_fn, eval_r, eval_c, eval_lambda))
              << "\n";
    return 0;
  }

  if (*scan) {
    if (!(scan_from < scan_to) || scan_points < 2) {
      throw elm::ParamError("scan: need from < to and points >= 2");
    }
    std::ofstream file;
    if (scan_out != "-") {
      file.open(scan_out);
      if (!file) {
        throw elm::ParamError("scan: cannot open " + scan_out);
      }
    }
    std::ostream& out = scan_out == "-" ? std::cout : file;
    out << "r,value\n";
    const double step = (scan_to - scan_from) / static_cast<double>(
                                                    scan_points - 1);
    for (std::int64_t i = 0; i < scan_points; ++i) {
      const double r = i + 1 == scan_points
                           ? scan_to
                           : scan_from + step * static_cast<double>(i);
      out << format17(r) << ','
          << format17(eval_named(scan_fn, r, scan_c, scan_lambda)) << '\n';
    }
    if (!out) {
      throw elm::ParamError("scan: write failed");
    }
    return 0;
  }

  if (*est) {
    const elm::CEstimate result = elm::estimate_c(est_points, est_tol);
    std::cout << "C=" << format17(result.c) << "\n"
              << "r0=" << format17(result.r0) << "\n"
              << "refinement_delta=" << format17(result.refinement_delta)
              << "\n"
              << "grid_points=" << result.grid_points << "\n";
    return 0;
  }

  if (*verify) {
    const elm::Direction dir = verify_dir == "forward"
                                   ? elm::Direction::kForward
                                   : elm::Direction::kReverse;
    const elm::VerificationReport report = elm::verify_theorem(
        elm::MeanOrder{verify_lambda}, dir, verify_samples, verify_seed);
    std::cout << "lambda=" << format17(report.lambda) << "\n"
              << "direction=" << verify_dir << "\n"
              << "samples=" << report.samples << "\n"
              << "seed=" << report.seed << "\n"
              << "violations=" << report.violations << "\n"
              << "worst_margin=" << format17(report.worst_margin) << "\n";
    if (report.witness) {
      std::cout << "witness_x=" << format17(report.witness->first) << "\n"
                << "witness_y=" << format17(report.witness->second) << "\n";
    }
    return report.violations == 0 ? 0 : kExitViolations;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const elm::NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
