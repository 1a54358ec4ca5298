#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colebrook/core.hpp"
#include "colebrook/sampling.hpp"
#include "colebrook/schemes.hpp"

namespace colebrook {

struct ErrorEntry {
  double re = 0.0;
  double rel_rough = 0.0;
  double lambda_ref = 0.0;
  double lambda_approx = 0.0;
  double rel_err_pct = 0.0;
};

struct ErrorMap {
  GridSpec grid;
  std::vector<ErrorEntry> entries;  // rough-major, same order as build_grid
};

struct ErrorStats {
  double max_pct = 0.0;
  std::size_t argmax_index = 0;
  double argmax_re = 0.0;
  double argmax_rough = 0.0;
  double mean_pct = 0.0;
  double p99_pct = 0.0;  // nearest rank
};

// Reduction over entries. Ties on the maximum go to the lexicographically
// smallest (re, rel_rough); the mean uses compensated summation.
ErrorStats compute_stats(const std::vector<ErrorEntry>& entries);

struct ScanOptions {
  double oracle_tol = 1.0e-12;
  int oracle_max_iter = 100;
  int workers = 1;  // 0 = hardware concurrency
  EvalOptions eval;
};

struct ScanResult {
  ErrorMap map;
  ErrorStats stats;
};

// Relative error of a scheme against the converged oracle at every grid
// point. Results do not depend on the number of workers.
ScanResult scan_errors(std::string_view scheme_id, const GridSpec& grid,
                       const ScanOptions& options = {});

// Oracle friction factors for a list of points, partitioned over workers.
std::vector<double> oracle_lambdas(const std::vector<FlowPoint>& points,
                                   const ScanOptions& options = {});

struct Timing {
  double median_ns = 0.0;
  double mad_ns = 0.0;  // median absolute deviation
};

struct CostProfile {
  std::string scheme_id;
  int n_log = 0;  // real log10 / ln calls, normalization included
  int n_sin = 0;
  int n_pow = 0;
  int n_div = 0;  // divisions needed to produce x = 1/sqrt(lambda)
  std::optional<Timing> timing;
};

CostProfile cost_profile(std::string_view scheme_id,
                         const EvalOptions& options = {});

// Maximum relative error (%) quoted for a scheme in the published figures,
// if any.
std::optional<double> published_max_pct(std::string_view scheme_id);

struct Table1Row {
  std::string scheme_id;
  std::string accuracy_class;  // High / Moderate / Low
  int n_log = 0;
  double published_pct = 0.0;
  double measured_pct = 0.0;
};

std::vector<Table1Row> table1_report(const GridSpec& grid,
                                     const ScanOptions& options = {});
std::string format_table1_text(const std::vector<Table1Row>& rows);
std::string format_table1_csv(const std::vector<Table1Row>& rows);

struct BenchRecord {
  std::string scheme_id;
  Timing timing;
  double sink = 0.0;  // sum of results, keeps the work observable
};

struct BenchReport {
  std::vector<BenchRecord> records;
  // Set when both eq2a2 and eq2a2-pade were measured.
  std::optional<bool> pade_faster_than_exact;
};

// Single-threaded wall-clock timing of whole-batch loops.
BenchReport benchmark(const std::vector<std::string>& scheme_ids,
                      const std::vector<FlowPoint>& batch, int reps,
                      const EvalOptions& options = {});

enum class KernelCheck { LnPade, SinPade, SinQuintic };

KernelCheck parse_kernel_check(std::string_view text);
std::string_view to_string(KernelCheck check);

struct KernelSweep {
  KernelCheck check = KernelCheck::SinPade;
  double lo = 0.0;  // open sweep interval
  double hi = 0.0;
  std::size_t samples = 0;
  double max_rel_err_pct = 0.0;
  double worst_arg = 0.0;
  double bound_pct = 0.0;
  bool pass = false;
};

// Dense sweep of a kernel against the standard library function over its
// window: (-0.08821, 1.18456) for the sines, [0.9, 1.1] for the logarithm.
// Points where the reference value is zero are skipped.
KernelSweep sweep_kernel(KernelCheck check, std::size_t samples);

}  // namespace colebrook
