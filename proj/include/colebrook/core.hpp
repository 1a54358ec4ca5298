#pragma once

#include <optional>

namespace colebrook {

// Validated turbulent domain of the Colebrook relation.
inline constexpr double kReMin = 4000.0;
inline constexpr double kReMax = 1.0e8;
inline constexpr double kRelRoughMax = 0.05;

// Smallest relative roughness accepted by the log-normalized and
// transformed (theta) paths. Direct fixed-point paths accept 0.
inline constexpr double kMinNormalizedRough = 1.0e-9;

enum class DomainPolicy {
  Strict,  // reject points outside the validated domain
  Flag,    // accept them, set FlowPoint::out_of_domain
};

// One (Re, eps/D) input pair.
struct FlowPoint {
  double re = 0.0;
  double rel_rough = 0.0;
  bool out_of_domain = false;

  // Throws DomainError for non-finite values, Re <= 0 or eps/D < 0, and for
  // points outside [4000, 1e8] x [0, 0.05] under DomainPolicy::Strict.
  static FlowPoint make(double re, double rel_rough,
                        DomainPolicy policy = DomainPolicy::Strict);

  bool in_validated_domain() const noexcept;
};

// a = log10(Re), b = -log10(eps/D).
struct NormalizedPoint {
  double a = 0.0;
  double b = 0.0;
};

// An approximant x = 1/sqrt(lambda) together with its position in the
// acceleration chain (0 = starter).
struct FrictionIterate {
  double x = 0.0;
  int step = 0;

  double lambda() const noexcept { return 1.0 / (x * x); }
};

struct SolveReport {
  FrictionIterate iterate;
  int iterations = 0;
  double residual = 0.0;  // |x_{k+1} - x_k| of the last update
  bool converged = false;
};

struct SolveOptions {
  double tol = 1.0e-12;
  int max_iter = 100;
  // Starting value; defaults to the eq2 starter polynomial inside the validated
  // domain and 8 elsewhere.
  std::optional<double> x0;
};

// Right-hand side of the Colebrook equation,
//   -2 log10(2.51 x / Re + (eps/D) / 3.71),
// i.e. one fixed-point step on x = 1/sqrt(lambda).
double colebrook_rhs(const FlowPoint& point, double x);

// Machine-precision solution of the implicit equation by plain fixed-point
// iteration. Throws NonConvergenceError carrying the last iterate.
SolveReport solve_colebrook_exact(const FlowPoint& point,
                                  const SolveOptions& options = {});

NormalizedPoint normalize(const FlowPoint& point);
FlowPoint denormalize(const NormalizedPoint& norm);

// (|lambda_accurate - lambda_approx| / lambda_accurate) * 100
double relative_error_pct(double lambda_accurate, double lambda_approx);

}  // namespace colebrook
