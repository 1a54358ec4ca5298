#include <doctest.h>

#include <cmath>

#include "colebrook/errors.hpp"
#include "colebrook/eval.hpp"
#include "colebrook/sampling.hpp"
#include "colebrook/schemes.hpp"

using namespace colebrook;

namespace {

GridSpec small_grid(int n) {
  GridSpec g;
  g.n_re = n;
  g.n_rough = n;
  return g;
}

}  // namespace

TEST_CASE("compute_stats: nearest-rank p99, tie-break and mean") {
  std::vector<ErrorEntry> e;
  for (int i = 1; i <= 200; ++i) {
    e.push_back({1e5 + i, 1e-3, 0.02, 0.02, static_cast<double>(i)});
  }
  auto s = compute_stats(e);
  CHECK(s.max_pct == 200.0);
  CHECK(s.argmax_index == 199);
  CHECK(s.p99_pct == 198.0);  // rank ceil(0.99 * 200) = 198
  CHECK(s.mean_pct == doctest::Approx(100.5).epsilon(1e-15));
  CHECK(s.max_pct >= s.p99_pct);
  CHECK(s.p99_pct >= s.mean_pct);

  // equal maxima: lexicographically smallest (re, rel_rough) wins
  std::vector<ErrorEntry> t{{5e4, 1e-3, 1, 1, 2.0},
                            {4e4, 2e-3, 1, 1, 2.0},
                            {4e4, 1e-3, 1, 1, 2.0},
                            {3e4, 1e-3, 1, 1, 1.0}};
  s = compute_stats(t);
  CHECK(s.argmax_index == 2);
  CHECK(s.argmax_re == 4e4);
  CHECK(s.argmax_rough == 1e-3);

  CHECK(compute_stats({}).max_pct == 0.0);
}

TEST_CASE("scan_errors basics") {
  const auto r = scan_errors("eq2", small_grid(20));
  CHECK(r.map.entries.size() == 400);
  for (const auto& e : r.map.entries) {
    CHECK(e.rel_err_pct >= 0.0);
    CHECK(e.lambda_ref > 0.0);
  }
  const auto& best = r.map.entries[r.stats.argmax_index];
  CHECK(best.rel_err_pct == r.stats.max_pct);
  CHECK(best.re == r.stats.argmax_re);

  CHECK_THROWS_AS(scan_errors("nope", small_grid(4)), ConfigError);
  GridSpec bad = small_grid(4);
  bad.re_min = -1.0;
  CHECK_THROWS_AS(scan_errors("eq2", bad), ConfigError);
}

TEST_CASE("scan aborts on oracle non-convergence") {
  ScanOptions o;
  o.oracle_max_iter = 1;
  CHECK_THROWS_AS(scan_errors("eq2", small_grid(4), o), NonConvergenceError);
}

TEST_CASE("scan results do not depend on the worker count") {
  const GridSpec g = small_grid(60);
  ScanOptions o;
  o.workers = 1;
  const auto one = scan_errors("eq5a", g, o);
  for (int w : {2, 3, 7, 0}) {
    o.workers = w;
    const auto many = scan_errors("eq5a", g, o);
    CHECK(many.stats.max_pct == one.stats.max_pct);
    CHECK(many.stats.argmax_index == one.stats.argmax_index);
    CHECK(many.stats.mean_pct == one.stats.mean_pct);
    CHECK(many.stats.p99_pct == one.stats.p99_pct);
  }
}

TEST_CASE("maximum error shrinks with every acceleration step") {
  const GridSpec g;
  ScanOptions o;
  o.workers = 0;
  const std::vector<std::vector<std::string>> chains{
      {"eq2", "eq2a1", "eq2a2"}, {"eq3", "eq3a"}, {"eq4", "eq4a"},
      {"eq5", "eq5a"},           {"eq6", "eq6a"}};
  for (const auto& chain : chains) {
    double prev = 1e300;
    for (const auto& id : chain) {
      const double m = scan_errors(id, g, o).stats.max_pct;
      CHECK_MESSAGE(m < prev, id);
      prev = m;
    }
  }
}

TEST_CASE("maxima are stable under grid refinement") {
  GridSpec coarse;
  GridSpec fine;
  fine.n_re = 600;
  fine.n_rough = 600;
  ScanOptions o;
  o.workers = 0;
  for (const auto& id : SchemeRegistry::instance().ids()) {
    const double a = scan_errors(id, coarse, o).stats.max_pct;
    const double b = scan_errors(id, fine, o).stats.max_pct;
    CHECK_MESSAGE(std::abs(b - a) / a < 0.10, id);
  }
}

TEST_CASE("cost profiles") {
  CHECK(cost_profile("eq2").n_log == 0);
  CHECK(cost_profile("eq2a1").n_log == 1);
  CHECK(cost_profile("eq2a2").n_log == 2);
  CHECK(cost_profile("eq2a2-pade").n_log == 1);
  CHECK(cost_profile("eq6").n_log == 2);
  CHECK(cost_profile("eq6a").n_log == 3);
  CHECK(cost_profile("eq6a").n_sin == 1);
  CHECK(cost_profile("eq3a").n_sin == 0);
  CHECK(cost_profile("eq2a1-t").n_log == 2);
  CHECK(cost_profile("eq2a2-t").n_log == 3);
  CHECK(cost_profile("eq5a-t").n_log == 3);

  CHECK(cost_profile("eq2").n_div == 2);
  CHECK(cost_profile("eq2a2").n_div == 6);
  CHECK(cost_profile("eq2a2-pade").n_div == 9);
  CHECK(cost_profile("eq3").n_div == 1);

  EvalOptions o;
  o.sin = SinStrategy::Pade;
  CHECK(cost_profile("eq6a", o).n_sin == 0);
  CHECK(cost_profile("eq6a", o).n_div == 3);
  o.sin = SinStrategy::Quintic;
  CHECK(cost_profile("eq4", o).n_div == 3);

  for (const auto& id : SchemeRegistry::instance().ids()) {
    CHECK(cost_profile(id).n_pow == 0);
    CHECK_FALSE(cost_profile(id).timing.has_value());
  }
  CHECK_THROWS_AS(cost_profile("nope"), ConfigError);
}

TEST_CASE("table1 report layout") {
  const auto rows = table1_report(small_grid(30));
  REQUIRE(rows.size() == 8);
  const double published[] = {0.13, 0.17, 0.28, 0.98, 2, 6, 6.29, 5.35};
  const int logs[] = {2, 3, 3, 1, 2, 2, 3, 3};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].scheme_id == SchemeRegistry::table1_ids()[i]);
    CHECK(rows[i].published_pct == published[i]);
    CHECK(rows[i].n_log == logs[i]);
    CHECK(rows[i].measured_pct > 0.0);
  }
  const auto text = format_table1_text(rows);
  CHECK(text.find("eq2a2") != std::string::npos);
  CHECK(text.find("6.29") != std::string::npos);
  const auto csv = format_table1_csv(rows);
  CHECK(csv.rfind("scheme,accuracy,n_log,published_pct,measured_pct\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);

  CHECK(published_max_pct("eq2").value() == 16.56);
  CHECK_FALSE(published_max_pct("eq6a-t").has_value());
}

TEST_CASE("benchmark") {
  const auto batch = sobol_2d(500);
  const auto report = benchmark({"eq2", "eq2a2", "eq2a2-pade"}, batch, 3);
  REQUIRE(report.records.size() == 3);
  for (const auto& r : report.records) {
    CHECK(r.timing.median_ns > 0.0);
    CHECK(r.timing.mad_ns >= 0.0);
    CHECK(r.sink > 0.0);
  }
  CHECK(report.pade_faster_than_exact.has_value());
  CHECK_FALSE(benchmark({"eq2"}, batch, 3).pade_faster_than_exact.has_value());

  CHECK_THROWS_AS(benchmark({"eq2"}, batch, 2), ConfigError);
  CHECK_THROWS_AS(benchmark({"eq2"}, {}, 3), ConfigError);
  CHECK_THROWS_AS(benchmark({"nope"}, batch, 3), ConfigError);
}
