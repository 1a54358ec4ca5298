#include "colebrook/core.hpp"

#include <cmath>
#include <string>

#include "colebrook/errors.hpp"
#include "colebrook/schemes.hpp"

namespace colebrook {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

}  // namespace

FlowPoint FlowPoint::make(double re, double rel_rough, DomainPolicy policy) {
  require_finite(re, "Re");
  require_finite(rel_rough, "eps/D");
  if (re <= 0.0) {
    throw DomainError("Re must be positive");
  }
  if (rel_rough < 0.0) {
    throw DomainError("eps/D must be non-negative");
  }
  FlowPoint p{re, rel_rough, false};
  p.out_of_domain = !p.in_validated_domain();
  if (p.out_of_domain && policy == DomainPolicy::Strict) {
    throw DomainError("point (Re=" + std::to_string(re) + ", eps/D=" +
                      std::to_string(rel_rough) +
                      ") is outside the validated turbulent domain");
  }
  return p;
}

bool FlowPoint::in_validated_domain() const noexcept {
  return re >= kReMin && re <= kReMax && rel_rough >= 0.0 &&
         rel_rough <= kRelRoughMax;
}

double colebrook_rhs(const FlowPoint& point, double x) {
  require_finite(x, "x");
  require_finite(point.re, "Re");
  require_finite(point.rel_rough, "eps/D");
  if (x <= 0.0) {
    throw DomainError("x = 1/sqrt(lambda) must be positive");
  }
  if (point.re <= 0.0) {
    throw DomainError("Re must be positive");
  }
  const double y = 2.51 * x / point.re + point.rel_rough / 3.71;
  if (!(y > 0.0)) {
    throw DomainError("Colebrook logarithm argument is not positive");
  }
  return -2.0 * std::log10(y);
}

SolveReport solve_colebrook_exact(const FlowPoint& point,
                                  const SolveOptions& options) {
  if (!(options.tol > 0.0)) {
    throw DomainError("tolerance must be positive");
  }
  if (options.max_iter < 1) {
    throw DomainError("max_iter must be at least 1");
  }

  double x = 8.0;
  if (options.x0) {
    x = *options.x0;
  } else if (point.in_validated_domain()) {
    x = starter_eq2(point).x;
  }

  SolveReport report;
  for (int k = 1; k <= options.max_iter; ++k) {
    const double next = colebrook_rhs(point, x);
    report.residual = std::abs(next - x);
    report.iterations = k;
    x = next;
    if (report.residual <= options.tol) {
      report.converged = true;
      break;
    }
  }
  report.iterate = FrictionIterate{x, report.iterations};
  if (!report.converged) {
    throw NonConvergenceError(
        "Colebrook fixed-point iteration did not converge at Re=" +
            std::to_string(point.re) + ", eps/D=" +
            std::to_string(point.rel_rough),
        x, report.iterations);
  }
  return report;
}

NormalizedPoint normalize(const FlowPoint& point) {
  require_finite(point.re, "Re");
  require_finite(point.rel_rough, "eps/D");
  if (point.re <= 0.0) {
    throw DomainError("Re must be positive");
  }
  if (point.rel_rough <= 0.0) {
    throw DomainError("normalization undefined for smooth limit (eps/D = 0)");
  }
  if (point.rel_rough < kMinNormalizedRough) {
    throw DomainError("eps/D below 1e-9 is not supported by normalized forms");
  }
  return {std::log10(point.re), -std::log10(point.rel_rough)};
}

FlowPoint denormalize(const NormalizedPoint& norm) {
  return FlowPoint::make(std::pow(10.0, norm.a), std::pow(10.0, -norm.b),
                         DomainPolicy::Flag);
}

double relative_error_pct(double lambda_accurate, double lambda_approx) {
  if (!(lambda_accurate > 0.0)) {
    throw DomainError("reference friction factor must be positive");
  }
  return std::abs(lambda_accurate - lambda_approx) / lambda_accurate * 100.0;
}

}  // namespace colebrook
