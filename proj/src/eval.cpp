#include "colebrook/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include "colebrook/errors.hpp"
#include "colebrook/kernels.hpp"

namespace colebrook {

namespace {

int resolve_workers(int requested, std::size_t n) {
  int w = requested;
  if (w <= 0) {
    w = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  return static_cast<int>(std::min<std::size_t>(w, std::max<std::size_t>(n, 1)));
}

// Runs body(i) for i in [0, n) over contiguous chunks. If any index throws,
// the exception of the smallest failing index is rethrown.
template <typename Body>
void parallel_for(std::size_t n, int workers, Body body) {
  const int w = resolve_workers(workers, n);
  if (w == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::size_t> error_index(w, n);
  std::vector<std::thread> threads;
  threads.reserve(w);
  const std::size_t chunk = (n + w - 1) / w;
  for (int t = 0; t < w; ++t) {
    const std::size_t lo = std::min(n, t * chunk);
    const std::size_t hi = std::min(n, lo + chunk);
    threads.emplace_back([&, t, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) {
        try {
          body(i);
        } catch (...) {
          errors[t] = std::current_exception();
          error_index[t] = i;
          return;
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  const auto first = std::min_element(error_index.begin(), error_index.end());
  if (*first < n) {
    std::rethrow_exception(errors[first - error_index.begin()]);
  }
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

ScanResult scan_against(const SchemeSpec& spec, const GridSpec& grid,
                        const std::vector<FlowPoint>& points,
                        const std::vector<double>& lambda_ref,
                        const ScanOptions& options) {
  ScanResult out;
  out.map.grid = grid;
  out.map.entries.resize(points.size());
  parallel_for(points.size(), options.workers, [&](std::size_t i) {
    const FlowPoint& p = points[i];
    const double approx = evaluate_scheme(spec, p, options.eval).lambda();
    out.map.entries[i] = ErrorEntry{p.re, p.rel_rough, lambda_ref[i], approx,
                                    relative_error_pct(lambda_ref[i], approx)};
  });
  out.stats = compute_stats(out.map.entries);
  return out;
}

}  // namespace

ErrorStats compute_stats(const std::vector<ErrorEntry>& entries) {
  ErrorStats s;
  if (entries.empty()) return s;

  // Neumaier summation
  double sum = 0.0;
  double comp = 0.0;
  std::size_t best = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double e = entries[i].rel_err_pct;
    const double t = sum + e;
    comp += std::abs(sum) >= std::abs(e) ? (sum - t) + e : (e - t) + sum;
    sum = t;

    const ErrorEntry& cur = entries[best];
    if (e > cur.rel_err_pct ||
        (e == cur.rel_err_pct &&
         std::pair(entries[i].re, entries[i].rel_rough) <
             std::pair(cur.re, cur.rel_rough))) {
      best = i;
    }
  }
  s.max_pct = entries[best].rel_err_pct;
  s.argmax_index = best;
  s.argmax_re = entries[best].re;
  s.argmax_rough = entries[best].rel_rough;
  s.mean_pct = (sum + comp) / static_cast<double>(entries.size());

  std::vector<double> sorted;
  sorted.reserve(entries.size());
  for (const auto& e : entries) sorted.push_back(e.rel_err_pct);
  std::sort(sorted.begin(), sorted.end());
  const auto rank = static_cast<std::size_t>(
      std::ceil(0.99 * static_cast<double>(sorted.size())));
  s.p99_pct = sorted[std::max<std::size_t>(rank, 1) - 1];
  return s;
}

std::vector<double> oracle_lambdas(const std::vector<FlowPoint>& points,
                                   const ScanOptions& options) {
  SolveOptions solve;
  solve.tol = options.oracle_tol;
  solve.max_iter = options.oracle_max_iter;
  std::vector<double> out(points.size());
  parallel_for(points.size(), options.workers, [&](std::size_t i) {
    out[i] = solve_colebrook_exact(points[i], solve).iterate.lambda();
  });
  return out;
}

ScanResult scan_errors(std::string_view scheme_id, const GridSpec& grid,
                       const ScanOptions& options) {
  const SchemeSpec& spec = SchemeRegistry::instance().find(scheme_id);
  const auto points = build_grid(grid);
  const auto ref = oracle_lambdas(points, options);
  return scan_against(spec, grid, points, ref, options);
}

CostProfile cost_profile(std::string_view scheme_id,
                         const EvalOptions& options) {
  const SchemeSpec& spec = SchemeRegistry::instance().find(scheme_id);
  CostProfile c;
  c.scheme_id = spec.id;

  switch (spec.starter) {
    case Starter::Eq2: c.n_div += 2; break;
    case Starter::Eq3: c.n_div += 1; break;
    default: break;
  }
  const bool normalized = spec.starter != Starter::Eq2;
  if (normalized) c.n_log += 2;

  if (spec.starter_has_sine()) {
    switch (options.sin.value_or(spec.sin_strategy)) {
      case SinStrategy::Exact: c.n_sin += 1; break;
      case SinStrategy::Pade: c.n_div += 1; break;
      case SinStrategy::Quintic: c.n_div += 3; break;
    }
  }

  if (spec.log_strategy == LogStrategy::PadeOneLog) {
    // first step: y1 (2 divisions) and its logarithm; second step: y2 (2),
    // z = y1 / y2, the rational ln, and the division by ln 10
    c.n_log += 1;
    c.n_div += 2 + 5;
  } else if (spec.accel_form == AccelForm::Direct) {
    c.n_log += spec.accel_steps;
    c.n_div += 2 * spec.accel_steps;
  } else if (spec.accel_steps > 0) {
    if (!normalized) c.n_log += 1;  // b = -log10(eps/D)
    c.n_log += spec.accel_steps;    // ln(1 - theta)
    c.n_div += spec.accel_steps;    // theta
  }
  return c;
}

std::optional<double> published_max_pct(std::string_view scheme_id) {
  static const std::map<std::string, double, std::less<>> published{
      {"eq2", 16.56},   {"eq2a1", 0.98}, {"eq2a2", 0.13}, {"eq2a2-pade", 0.13},
      {"eq3", 20.0},    {"eq3a", 5.35},  {"eq4", 60.0},   {"eq4a", 6.29},
      {"eq5", 6.0},     {"eq5a", 0.28},  {"eq6", 2.0},    {"eq6a", 0.17},
  };
  const auto it = published.find(scheme_id);
  if (it == published.end()) return std::nullopt;
  return it->second;
}

std::vector<Table1Row> table1_report(const GridSpec& grid,
                                     const ScanOptions& options) {
  static const std::map<std::string, std::string, std::less<>> klass{
      {"eq2a2", "High"},     {"eq6a", "High"}, {"eq5a", "High"},
      {"eq2a1", "Moderate"}, {"eq6", "Moderate"}, {"eq5", "Low"},
      {"eq4a", "Low"},       {"eq3a", "Low"},
  };
  const auto points = build_grid(grid);
  const auto ref = oracle_lambdas(points, options);

  std::vector<Table1Row> rows;
  for (const auto& id : SchemeRegistry::table1_ids()) {
    const SchemeSpec& spec = SchemeRegistry::instance().find(id);
    const auto scan = scan_against(spec, grid, points, ref, options);
    Table1Row row;
    row.scheme_id = id;
    row.accuracy_class = klass.at(id);
    row.n_log = cost_profile(id, options.eval).n_log;
    row.published_pct = *published_max_pct(id);
    row.measured_pct = scan.stats.max_pct;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_table1_text(const std::vector<Table1Row>& rows) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-8s %-9s %5s %14s %14s\n", "scheme",
                "accuracy", "logs", "published_pct", "measured_pct");
  os << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-8s %-9s %5d %14.2f %14.4f\n",
                  r.scheme_id.c_str(), r.accuracy_class.c_str(), r.n_log,
                  r.published_pct, r.measured_pct);
    os << line;
  }
  return os.str();
}

std::string format_table1_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream os;
  os << "scheme,accuracy,n_log,published_pct,measured_pct\n";
  char line[160];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%s,%s,%d,%.17g,%.17g\n",
                  r.scheme_id.c_str(), r.accuracy_class.c_str(), r.n_log,
                  r.published_pct, r.measured_pct);
    os << line;
  }
  return os.str();
}

BenchReport benchmark(const std::vector<std::string>& scheme_ids,
                      const std::vector<FlowPoint>& batch, int reps,
                      const EvalOptions& options) {
  if (reps < 3) {
    throw ConfigError("benchmark needs at least 3 repetitions");
  }
  if (batch.empty()) {
    throw ConfigError("benchmark batch is empty");
  }
  using Clock = std::chrono::steady_clock;

  BenchReport report;
  for (const auto& id : scheme_ids) {
    const SchemeSpec& spec = SchemeRegistry::instance().find(id);
    std::vector<double> per_eval(static_cast<std::size_t>(reps));
    volatile double sink = 0.0;
    for (int r = 0; r < reps; ++r) {
      double acc = 0.0;
      const auto t0 = Clock::now();
      for (const FlowPoint& p : batch) {
        acc += evaluate_scheme(spec, p, options).x;
      }
      const auto t1 = Clock::now();
      sink = sink + acc;
      const double ns =
          std::chrono::duration<double, std::nano>(t1 - t0).count();
      per_eval[r] = ns / static_cast<double>(batch.size());
    }
    BenchRecord rec;
    rec.scheme_id = id;
    rec.timing.median_ns = median_of(per_eval);
    std::vector<double> dev;
    dev.reserve(per_eval.size());
    for (double v : per_eval) dev.push_back(std::abs(v - rec.timing.median_ns));
    rec.timing.mad_ns = median_of(std::move(dev));
    rec.sink = sink;
    report.records.push_back(std::move(rec));
  }

  const auto find = [&](std::string_view id) -> const BenchRecord* {
    for (const auto& r : report.records) {
      if (r.scheme_id == id) return &r;
    }
    return nullptr;
  };
  const BenchRecord* exact = find("eq2a2");
  const BenchRecord* pade = find("eq2a2-pade");
  if (exact != nullptr && pade != nullptr) {
    report.pade_faster_than_exact =
        pade->timing.median_ns < exact->timing.median_ns;
  }
  return report;
}

KernelCheck parse_kernel_check(std::string_view text) {
  if (text == "ln-pade") return KernelCheck::LnPade;
  if (text == "sin-pade") return KernelCheck::SinPade;
  if (text == "sin-quintic") return KernelCheck::SinQuintic;
  throw ConfigError("unknown kernel check '" + std::string(text) +
                    "' (expected ln-pade, sin-pade or sin-quintic)");
}

std::string_view to_string(KernelCheck check) {
  switch (check) {
    case KernelCheck::LnPade: return "ln-pade";
    case KernelCheck::SinPade: return "sin-pade";
    case KernelCheck::SinQuintic: return "sin-quintic";
  }
  return "?";
}

KernelSweep sweep_kernel(KernelCheck check, std::size_t samples) {
  if (samples < 1) {
    throw ConfigError("kernel sweep needs at least one sample");
  }
  KernelSweep out;
  out.check = check;
  out.samples = samples;
  double (*approx)(double) = nullptr;
  double (*reference)(double) = nullptr;
  switch (check) {
    case KernelCheck::LnPade:
      out.lo = 0.9;
      out.hi = 1.1;
      // measured 4.9e-8 %; pinned with headroom
      out.bound_pct = 1.0e-7;
      approx = kernels::pade_ln;
      reference = [](double z) { return std::log(z); };
      break;
    case KernelCheck::SinPade:
      out.lo = kernels::kSinWindowLo;
      out.hi = kernels::kSinWindowHi;
      out.bound_pct = 0.068;
      approx = kernels::pade_sin;
      reference = [](double x) { return std::sin(x); };
      break;
    case KernelCheck::SinQuintic:
      out.lo = kernels::kSinWindowLo;
      out.hi = kernels::kSinWindowHi;
      out.bound_pct = 0.003;
      approx = kernels::quintic_sin;
      reference = [](double x) { return std::sin(x); };
      break;
  }

  const double width = out.hi - out.lo;
  const double denom = static_cast<double>(samples + 1);
  for (std::size_t i = 1; i <= samples; ++i) {
    const double x = out.lo + width * (static_cast<double>(i) / denom);
    const double ref = reference(x);
    if (ref == 0.0) continue;
    const double err = std::abs(approx(x) - ref) / std::abs(ref) * 100.0;
    if (err > out.max_rel_err_pct) {
      out.max_rel_err_pct = err;
      out.worst_arg = x;
    }
  }
  out.pass = out.max_rel_err_pct <= out.bound_pct;
  return out;
}

}  // namespace colebrook
