#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "colebrook/config.hpp"
#include "colebrook/core.hpp"
#include "colebrook/errors.hpp"
#include "colebrook/eval.hpp"
#include "colebrook/kernels.hpp"
#include "colebrook/sampling.hpp"
#include "colebrook/schemes.hpp"

namespace py = pybind11;
using namespace colebrook;

namespace {

FlowPoint point(double re, double rough, bool strict) {
  return FlowPoint::make(re, rough,
                         strict ? DomainPolicy::Strict : DomainPolicy::Flag);
}

EvalOptions eval_options(const std::optional<std::string>& sin,
                         const std::string& constants) {
  EvalOptions o;
  if (sin) o.sin = parse_sin_strategy(*sin);
  o.constants = parse_constants_mode(constants);
  return o;
}

}  // namespace

PYBIND11_MODULE(_colebrook, m) {
  m.doc() = "Colebrook friction factor: oracle, explicit schemes, error scans";

  static py::exception<DomainError> domain_error(m, "DomainError",
                                                 PyExc_ValueError);
  static py::exception<ConfigError> config_error(m, "ConfigError",
                                                 PyExc_ValueError);
  static py::exception<IoError> io_error(m, "IoError", PyExc_OSError);
  static py::exception<NonConvergenceError> nonconv_error(
      m, "NonConvergenceError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      domain_error(e.what());
    } catch (const ConfigError& e) {
      config_error(e.what());
    } catch (const IoError& e) {
      io_error(e.what());
    } catch (const NonConvergenceError& e) {
      nonconv_error(e.what());
    }
  });

  m.def(
      "solve",
      [](double re, double rough, double tol, int max_iter, bool strict) {
        SolveOptions o;
        o.tol = tol;
        o.max_iter = max_iter;
        const auto r = solve_colebrook_exact(point(re, rough, strict), o);
        py::dict d;
        d["lambda"] = r.iterate.lambda();
        d["x"] = r.iterate.x;
        d["iterations"] = r.iterations;
        d["residual"] = r.residual;
        return d;
      },
      py::arg("re"), py::arg("rough"), py::arg("tol") = 1e-12,
      py::arg("max_iter") = 100, py::arg("strict") = true,
      "Converged friction factor of the implicit relation.");

  m.def(
      "colebrook_rhs",
      [](double re, double rough, double x) {
        return colebrook_rhs(point(re, rough, false), x);
      },
      py::arg("re"), py::arg("rough"), py::arg("x"));

  m.def(
      "evaluate_scheme",
      [](const std::string& id, double re, double rough,
         const std::optional<std::string>& sin, const std::string& constants,
         bool strict) {
        const auto it = evaluate_scheme(id, point(re, rough, strict),
                                        eval_options(sin, constants));
        py::dict d;
        d["lambda"] = it.lambda();
        d["x"] = it.x;
        d["steps"] = it.step;
        return d;
      },
      py::arg("scheme"), py::arg("re"), py::arg("rough"),
      py::arg("sin") = py::none(), py::arg("constants") = "printed",
      py::arg("strict") = true);

  m.def("scheme_ids", [] { return SchemeRegistry::instance().ids(); });

  m.def(
      "scan",
      [](const std::string& id, int n_re, int n_rough, double re_min,
         double re_max, double rough_min, double rough_max, int workers,
         const std::optional<std::string>& sin, const std::string& constants) {
        GridSpec g;
        g.n_re = n_re;
        g.n_rough = n_rough;
        g.re_min = re_min;
        g.re_max = re_max;
        g.rough_min = rough_min;
        g.rough_max = rough_max;
        ScanOptions o;
        o.workers = workers;
        o.eval = eval_options(sin, constants);
        ErrorStats s;
        {
          py::gil_scoped_release release;
          s = scan_errors(id, g, o).stats;
        }
        py::dict d;
        d["max_pct"] = s.max_pct;
        d["argmax_re"] = s.argmax_re;
        d["argmax_rough"] = s.argmax_rough;
        d["mean_pct"] = s.mean_pct;
        d["p99_pct"] = s.p99_pct;
        return d;
      },
      py::arg("scheme"), py::arg("n_re") = 300, py::arg("n_rough") = 300,
      py::arg("re_min") = 4000.0, py::arg("re_max") = 1e8,
      py::arg("rough_min") = 1e-6, py::arg("rough_max") = 0.05,
      py::arg("workers") = 0, py::arg("sin") = py::none(),
      py::arg("constants") = "printed",
      "Error statistics of a scheme over a log-spaced mesh.");

  m.def(
      "cost_profile",
      [](const std::string& id, const std::optional<std::string>& sin) {
        const auto c = cost_profile(id, eval_options(sin, "printed"));
        py::dict d;
        d["n_log"] = c.n_log;
        d["n_sin"] = c.n_sin;
        d["n_pow"] = c.n_pow;
        d["n_div"] = c.n_div;
        return d;
      },
      py::arg("scheme"), py::arg("sin") = py::none());

  m.def(
      "sobol_2d",
      [](std::size_t n, bool log_uniform) {
        SobolDomain dom;
        if (log_uniform) dom.mapping = SobolMapping::LogUniform;
        py::list out;
        for (const auto& p : sobol_2d(n, dom)) {
          out.append(py::make_tuple(p.re, p.rel_rough));
        }
        return out;
      },
      py::arg("n"), py::arg("log_uniform") = false);

  m.def("pade_ln", &kernels::pade_ln, py::arg("z"));
  m.def("pade_sin", &kernels::pade_sin, py::arg("x"));
  m.def("quintic_sin", &kernels::quintic_sin, py::arg("x"));

  m.def(
      "kernel_sweep",
      [](const std::string& check, std::size_t samples) {
        const auto s = sweep_kernel(parse_kernel_check(check), samples);
        py::dict d;
        d["max_rel_err_pct"] = s.max_rel_err_pct;
        d["worst_arg"] = s.worst_arg;
        d["bound_pct"] = s.bound_pct;
        d["pass"] = s.pass;
        return d;
      },
      py::arg("check"), py::arg("samples") = 100000);
}
