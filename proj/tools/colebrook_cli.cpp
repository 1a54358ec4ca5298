// colebrook: command-line front end for the friction-factor schemes, the
// oracle solver, error-map scans and kernel audits.
//
// Exit codes: 0 ok, 1 usage, 2 domain, 3 non-convergence, 4 I/O.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "colebrook/config.hpp"
#include "colebrook/core.hpp"
#include "colebrook/errors.hpp"
#include "colebrook/eval.hpp"
#include "colebrook/export.hpp"
#include "colebrook/kernels.hpp"
#include "colebrook/sampling.hpp"
#include "colebrook/schemes.hpp"

namespace cb = colebrook;
using json = nlohmann::json;

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kNonConvergence = 3,
  kIo = 4,
};

// Grid / config flags shared by scan, table1 and grid.
struct GridFlags {
  std::string grid;  // NxM
  double re_min = 0, re_max = 0, rough_min = 0, rough_max = 0;
  std::string re_spacing, rough_spacing;
  CLI::Option* o_re_min = nullptr;
  CLI::Option* o_re_max = nullptr;
  CLI::Option* o_rough_min = nullptr;
  CLI::Option* o_rough_max = nullptr;

  void add_to(CLI::App* app) {
    app->add_option("--grid", grid, "Mesh size NxM (Re points x eps/D points)");
    o_re_min = app->add_option("--re-min", re_min, "Lowest Reynolds number");
    o_re_max = app->add_option("--re-max", re_max, "Highest Reynolds number");
    o_rough_min = app->add_option("--rough-min", rough_min, "Lowest eps/D");
    o_rough_max = app->add_option("--rough-max", rough_max, "Highest eps/D");
    app->add_option("--re-spacing", re_spacing, "log | linear");
    app->add_option("--rough-spacing", rough_spacing, "log | linear");
  }

  void apply(cb::GridSpec& g) const {
    if (!grid.empty()) {
      const auto x = grid.find_first_of("xX");
      if (x == std::string::npos) {
        throw CLI::ValidationError("--grid", "expected NxM, got '" + grid + "'");
      }
      try {
        std::size_t used = 0;
        g.n_re = std::stoi(grid.substr(0, x), &used);
        if (used != x) throw std::invalid_argument(grid);
        const std::string m = grid.substr(x + 1);
        g.n_rough = std::stoi(m, &used);
        if (used != m.size()) throw std::invalid_argument(grid);
      } catch (const std::logic_error&) {
        throw CLI::ValidationError("--grid", "expected NxM, got '" + grid + "'");
      }
    }
    if (o_re_min->count()) g.re_min = re_min;
    if (o_re_max->count()) g.re_max = re_max;
    if (o_rough_min->count()) g.rough_min = rough_min;
    if (o_rough_max->count()) g.rough_max = rough_max;
    if (!re_spacing.empty()) g.re_spacing = cb::parse_spacing(re_spacing);
    if (!rough_spacing.empty()) g.rough_spacing = cb::parse_spacing(rough_spacing);
    g.validate();
  }
};

std::vector<std::string> expand_scheme_list(const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto& s : cb::SchemeRegistry::instance().ids()) out.push_back(s);
    } else {
      cb::SchemeRegistry::instance().find(id);  // validates
      out.push_back(id);
    }
  }
  return out;
}

std::string fmt(double v) { return cb::format_double(v); }

std::string domain_warning(const cb::FlowPoint& p) {
  return "warning: (Re=" + fmt(p.re) + ", eps/D=" + fmt(p.rel_rough) +
         ") is outside the validated domain Re in [4000, 1e8], eps/D in "
         "[0, 0.05]; result computed anyway";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colebrook friction-factor approximations and error maps"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key = value defaults file");

  // solve
  auto* solve = app.add_subcommand("solve", "Evaluate schemes at one point");
  double re = 0.0;
  double rough = 0.0;
  std::vector<std::string> solve_schemes;
  std::string solve_sin;
  bool as_json = false;
  solve->add_option("--re", re, "Reynolds number")->required();
  solve->add_option("--rough", rough, "Relative roughness eps/D")->required();
  solve->add_option("--scheme", solve_schemes,
                    "Scheme id (repeatable); 'colebrook' = iterative oracle")
      ->required();
  solve->add_option("--sin", solve_sin, "exact | pade | quintic");
  solve->add_flag("--json", as_json, "Print a JSON object");

  // scan
  auto* scan = app.add_subcommand("scan", "Error map of a scheme over a mesh");
  std::string scan_scheme;
  std::string scan_out;
  std::string scan_heatmap;
  std::string scan_sin;
  std::string scan_constants;
  int scan_workers = -1;
  GridFlags scan_grid;
  scan->add_option("--scheme", scan_scheme, "Scheme id")->required();
  scan_grid.add_to(scan);
  scan->add_option("--out", scan_out, "CSV output path");
  scan->add_option("--heatmap", scan_heatmap, "PGM heatmap output path");
  scan->add_option("--sin", scan_sin, "exact | pade | quintic");
  scan->add_option("--constants", scan_constants, "printed | full");
  scan->add_option("--workers", scan_workers, "Threads, 0 = all cores");

  // table1
  auto* table1 = app.add_subcommand("table1", "Accuracy versus complexity table");
  GridFlags table_grid;
  bool table_csv = false;
  int table_workers = -1;
  table_grid.add_to(table1);
  table1->add_flag("--csv", table_csv, "Machine-readable CSV instead of text");
  table1->add_option("--workers", table_workers, "Threads, 0 = all cores");

  // bench
  auto* bench = app.add_subcommand("bench", "Wall-time per evaluation");
  std::vector<std::string> bench_schemes{"all"};
  int reps = 7;
  std::size_t batch_size = 10000;
  std::string bench_sin;
  bench->add_option("--scheme", bench_schemes, "'all' or scheme ids");
  bench->add_option("--reps", reps, "Repetitions (>= 3)");
  bench->add_option("--batch", batch_size, "Sobol points per repetition");
  bench->add_option("--sin", bench_sin, "exact | pade | quintic");

  // kernels
  auto* kern = app.add_subcommand("kernels", "Audit a function kernel");
  std::string check;
  std::size_t sweep = 100000;
  kern->add_option("--check", check, "ln-pade | sin-pade | sin-quintic")
      ->required();
  kern->add_option("--sweep", sweep, "Number of sweep points");

  // grid
  auto* gridcmd = app.add_subcommand("grid", "Inspect the mesh or Sobol points");
  GridFlags grid_flags;
  bool list_points = false;
  std::size_t sobol_n = 0;
  bool sobol_log = false;
  grid_flags.add_to(gridcmd);
  gridcmd->add_flag("--list", list_points, "Print every point as CSV");
  gridcmd->add_option("--sobol", sobol_n, "Print N Sobol points instead");
  gridcmd->add_flag("--log-uniform", sobol_log, "Log-uniform Sobol mapping");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    cb::CliConfig cfg;
    if (!config_path.empty()) cfg = cb::load_config(config_path);

    if (*solve) {
      cb::EvalOptions eval;
      eval.sin = solve_sin.empty() ? cfg.sin : cb::parse_sin_strategy(solve_sin);
      eval.constants = cfg.constants;
      for (const auto& id : solve_schemes) {
        if (id != "colebrook") cb::SchemeRegistry::instance().find(id);
      }

      const auto point = cb::FlowPoint::make(re, rough, cb::DomainPolicy::Flag);
      cb::SolveOptions so;
      so.tol = cfg.oracle_tol;
      const auto oracle = cb::solve_colebrook_exact(point, so);
      const double lam_ref = oracle.iterate.lambda();

      json doc;
      doc["re"] = point.re;
      doc["rough"] = point.rel_rough;
      doc["out_of_domain"] = point.out_of_domain;
      doc["results"] = json::array();
      if (point.out_of_domain && !as_json) {
        std::cout << domain_warning(point) << '\n';
      }
      if (point.out_of_domain && as_json) doc["warning"] = domain_warning(point);

      bool first = true;
      for (const auto& id : solve_schemes) {
        cb::FrictionIterate it = oracle.iterate;
        int steps = oracle.iterations;
        if (id != "colebrook") {
          it = cb::evaluate_scheme(id, point, eval);
          steps = it.step;
        }
        const double err = cb::relative_error_pct(lam_ref, it.lambda());
        if (as_json) {
          doc["results"].push_back({{"scheme", id},
                                    {"lambda", it.lambda()},
                                    {"x", it.x},
                                    {"oracle_lambda", lam_ref},
                                    {"rel_err_pct", err},
                                    {"steps", steps}});
        } else {
          if (!first) std::cout << '\n';
          std::cout << "scheme        " << id << '\n'
                    << "lambda        " << fmt(it.lambda()) << '\n'
                    << "x             " << fmt(it.x) << '\n'
                    << "oracle_lambda " << fmt(lam_ref) << '\n'
                    << "rel_err_pct   " << fmt(err) << '\n'
                    << "steps         " << steps << '\n';
        }
        first = false;
      }
      if (as_json) std::cout << doc.dump() << '\n';
      return kOk;
    }

    if (*scan) {
      scan_grid.apply(cfg.grid);
      cb::ScanOptions so;
      so.oracle_tol = cfg.oracle_tol;
      so.workers = scan_workers >= 0 ? scan_workers : cfg.workers;
      so.eval.sin = scan_sin.empty() ? cfg.sin : cb::parse_sin_strategy(scan_sin);
      so.eval.constants = scan_constants.empty()
                              ? cfg.constants
                              : cb::parse_constants_mode(scan_constants);
      const auto result = cb::scan_errors(scan_scheme, cfg.grid, so);
      const std::filesystem::path outdir(cfg.output_dir);
      if (!scan_out.empty()) cb::export_csv(result.map, outdir / scan_out);
      if (!scan_heatmap.empty()) {
        cb::export_heatmap(result.map, outdir / scan_heatmap);
      }
      const auto& s = result.stats;
      std::cout << scan_scheme << ' ' << fmt(s.max_pct) << ' '
                << fmt(s.argmax_re) << ' ' << fmt(s.argmax_rough) << ' '
                << fmt(s.mean_pct) << ' ' << fmt(s.p99_pct) << '\n';
      return kOk;
    }

    if (*table1) {
      table_grid.apply(cfg.grid);
      cb::ScanOptions so;
      so.oracle_tol = cfg.oracle_tol;
      so.workers = table_workers >= 0 ? table_workers : cfg.workers;
      so.eval.constants = cfg.constants;
      const auto rows = cb::table1_report(cfg.grid, so);
      std::cout << (table_csv ? cb::format_table1_csv(rows)
                              : cb::format_table1_text(rows));
      return kOk;
    }

    if (*bench) {
      cb::EvalOptions eval;
      eval.sin = bench_sin.empty() ? cfg.sin : cb::parse_sin_strategy(bench_sin);
      eval.constants = cfg.constants;
      const auto ids = expand_scheme_list(bench_schemes);
      cb::SobolDomain dom;
      dom.mapping = cb::SobolMapping::LogUniform;
      const auto batch = cb::sobol_2d(batch_size, dom);
      const auto report = cb::benchmark(ids, batch, reps, eval);
      std::printf("%-12s %12s %10s %6s %6s\n", "scheme", "median_ns", "mad_ns",
                  "n_log", "n_sin");
      for (const auto& r : report.records) {
        const auto cost = cb::cost_profile(r.scheme_id, eval);
        std::printf("%-12s %12.2f %10.2f %6d %6d\n", r.scheme_id.c_str(),
                    r.timing.median_ns, r.timing.mad_ns, cost.n_log, cost.n_sin);
      }
      if (report.pade_faster_than_exact) {
        std::printf("eq2a2-pade faster than eq2a2 on this host: %s\n",
                    *report.pade_faster_than_exact ? "yes" : "no");
      }
      return kOk;
    }

    if (*kern) {
      const auto k = cb::sweep_kernel(cb::parse_kernel_check(check), sweep);
      std::cout << "kernel          " << cb::to_string(k.check) << '\n'
                << "window          (" << fmt(k.lo) << ", " << fmt(k.hi) << ")\n"
                << "samples         " << k.samples << '\n'
                << "max_rel_err_pct " << fmt(k.max_rel_err_pct) << '\n'
                << "worst_arg       " << fmt(k.worst_arg) << '\n'
                << "bound_pct       " << fmt(k.bound_pct) << '\n';
      if (k.check == cb::KernelCheck::SinQuintic) {
        // the published quintic keeps an x^2 term, so it is not odd
        const double x = -cb::kernels::kSinWindowLo;
        std::cout << "odd_defect      "
                  << fmt(cb::kernels::quintic_sin(x) + cb::kernels::quintic_sin(-x))
                  << "  (q(x) + q(-x) at x = " << fmt(x) << ")\n";
      }
      std::cout << (k.pass ? "PASS" : "FAIL") << '\n';
      return kOk;
    }

    if (*gridcmd) {
      grid_flags.apply(cfg.grid);
      if (sobol_n > 0) {
        cb::SobolDomain dom{cfg.grid.re_min, cfg.grid.re_max,
                            cfg.grid.rough_min, cfg.grid.rough_max,
                            sobol_log ? cb::SobolMapping::LogUniform
                                      : cb::SobolMapping::Uniform};
        std::cout << "re,rel_rough\n";
        for (const auto& p : cb::sobol_2d(sobol_n, dom)) {
          std::cout << fmt(p.re) << ',' << fmt(p.rel_rough) << '\n';
        }
        return kOk;
      }
      const auto& g = cfg.grid;
      if (list_points) {
        std::cout << "re,rel_rough\n";
        for (const auto& p : cb::build_grid(g)) {
          std::cout << fmt(p.re) << ',' << fmt(p.rel_rough) << '\n';
        }
        return kOk;
      }
      const auto spacing = [](cb::Spacing s) {
        return s == cb::Spacing::Log ? "log" : "linear";
      };
      std::cout << "points   " << g.size() << '\n'
                << "re       [" << fmt(g.re_min) << ", " << fmt(g.re_max)
                << "] n=" << g.n_re << ' ' << spacing(g.re_spacing) << '\n'
                << "rough    [" << fmt(g.rough_min) << ", " << fmt(g.rough_max)
                << "] n=" << g.n_rough << ' ' << spacing(g.rough_spacing)
                << '\n';
      return kOk;
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const cb::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const cb::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const cb::NonConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << " (last x = "
              << fmt(e.last_x()) << ")\n";
    return kNonConvergence;
  } catch (const cb::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
