#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colebrook/core.hpp"

namespace colebrook {

enum class Starter { Eq2, Eq3, Eq4, Eq5, Eq6 };

enum class AccelForm {
  Direct,       // -2 log10(2.51 x / Re + (eps/D) / 3.71)
  Transformed,  // 2 log10(3.71) + 2b - (2 / ln 10) ln(1 - theta)
};

enum class LogStrategy {
  Exact,
  PadeOneLog,  // second step through the rational logarithm
};

enum class SinStrategy { Exact, Pade, Quintic };

// Constants of the transformed accelerator: as printed (1.1387478, 0.8686)
// or at full double precision.
enum class ConstantsMode { Printed, Full };

std::string_view to_string(Starter s);
std::string_view to_string(AccelForm f);
std::string_view to_string(LogStrategy s);
std::string_view to_string(SinStrategy s);
std::string_view to_string(ConstantsMode m);

SinStrategy parse_sin_strategy(std::string_view text);
ConstantsMode parse_constants_mode(std::string_view text);

struct SchemeSpec {
  std::string id;
  Starter starter = Starter::Eq2;
  int accel_steps = 0;
  AccelForm accel_form = AccelForm::Direct;
  LogStrategy log_strategy = LogStrategy::Exact;
  SinStrategy sin_strategy = SinStrategy::Exact;

  bool starter_has_sine() const noexcept;
  // Throws ConfigError if the field combination is not allowed.
  void validate() const;
};

struct EvalOptions {
  // Overrides SchemeSpec::sin_strategy for starters that contain a sine.
  std::optional<SinStrategy> sin;
  ConstantsMode constants = ConstantsMode::Printed;
};

struct Theta {
  double value = 0.0;
};

// eq2: rational polynomial in raw Re and eps/D.
FrictionIterate starter_eq2(const FlowPoint& point);
// eq3..eq6: polynomials in the normalized a, b.
FrictionIterate starter_eq3(const NormalizedPoint& norm);
FrictionIterate starter_eq4(const NormalizedPoint& norm,
                            SinStrategy sin = SinStrategy::Exact);
FrictionIterate starter_eq5(const NormalizedPoint& norm,
                            SinStrategy sin = SinStrategy::Exact);
FrictionIterate starter_eq6(const NormalizedPoint& norm,
                            SinStrategy sin = SinStrategy::Exact);

// Argument of the sine term of a normalized starter (eq4..eq6).
double sine_argument(Starter starter, const NormalizedPoint& norm);

struct SineValue {
  double value = 0.0;
  bool fallback = false;  // kernel requested but argument outside its window
};

// Sine through the chosen kernel; outside the kernel window the exact sine
// is used and `fallback` is set.
SineValue evaluate_sine(double x, SinStrategy strategy);

// One fixed-point step; the same map as colebrook_rhs.
FrictionIterate accelerate(const FlowPoint& point, const FrictionIterate& it);

Theta theta(const FlowPoint& point, double x);

// Transformed fixed-point step. `b` may be supplied when -log10(eps/D) was
// already computed for normalization.
FrictionIterate accelerate_transformed(
    const FlowPoint& point, const FrictionIterate& it,
    ConstantsMode constants = ConstantsMode::Printed,
    std::optional<double> b = std::nullopt);

struct SchemeTrace {
  FrictionIterate iterate;
  std::optional<double> sine_argument;
  bool sine_fallback = false;
  std::optional<double> pade_z;
};

FrictionIterate evaluate_scheme(const SchemeSpec& spec, const FlowPoint& point,
                                const EvalOptions& options = {});
SchemeTrace evaluate_scheme_traced(const SchemeSpec& spec,
                                   const FlowPoint& point,
                                   const EvalOptions& options = {});

// Immutable id -> SchemeSpec table.
//
//   eqN        starter only
//   eqNa, eqNa1  one direct acceleration step
//   eqNa2      two direct steps
//   -pade      second step through the one-log rational path
//   -t         transformed accelerator
class SchemeRegistry {
 public:
  static const SchemeRegistry& instance();

  const SchemeSpec& find(std::string_view id) const;
  bool contains(std::string_view id) const;
  const std::vector<SchemeSpec>& all() const noexcept { return specs_; }
  std::vector<std::string> ids() const;

  // Rows of the accuracy-versus-complexity table, in table order.
  static const std::vector<std::string>& table1_ids();

 private:
  SchemeRegistry();
  std::vector<SchemeSpec> specs_;
};

// Convenience: look up by id and evaluate.
FrictionIterate evaluate_scheme(std::string_view id, const FlowPoint& point,
                                const EvalOptions& options = {});

}  // namespace colebrook
