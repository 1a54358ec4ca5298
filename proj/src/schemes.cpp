#include "colebrook/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "colebrook/errors.hpp"
#include "colebrook/kernels.hpp"

namespace colebrook {

namespace {

// 2 log10(3.71) and 2 / ln 10, as printed and at full precision.
constexpr double kPrintedOffset = 1.1387478;
constexpr double kPrintedLnScale = 0.8686;
const double kFullOffset = 2.0 * std::log10(3.71);
constexpr double kFullLnScale = 2.0 / std::numbers::ln10;

void require_finite_norm(const NormalizedPoint& n) {
  if (!std::isfinite(n.a) || !std::isfinite(n.b)) {
    throw DomainError("normalized coordinates must be finite");
  }
}

}  // namespace

std::string_view to_string(Starter s) {
  switch (s) {
    case Starter::Eq2: return "eq2";
    case Starter::Eq3: return "eq3";
    case Starter::Eq4: return "eq4";
    case Starter::Eq5: return "eq5";
    case Starter::Eq6: return "eq6";
  }
  return "?";
}

std::string_view to_string(AccelForm f) {
  return f == AccelForm::Direct ? "direct" : "transformed";
}

std::string_view to_string(LogStrategy s) {
  return s == LogStrategy::Exact ? "exact" : "pade-one-log";
}

std::string_view to_string(SinStrategy s) {
  switch (s) {
    case SinStrategy::Exact: return "exact";
    case SinStrategy::Pade: return "pade";
    case SinStrategy::Quintic: return "quintic";
  }
  return "?";
}

std::string_view to_string(ConstantsMode m) {
  return m == ConstantsMode::Printed ? "printed" : "full";
}

SinStrategy parse_sin_strategy(std::string_view text) {
  if (text == "exact") return SinStrategy::Exact;
  if (text == "pade") return SinStrategy::Pade;
  if (text == "quintic") return SinStrategy::Quintic;
  throw ConfigError("unknown sine strategy '" + std::string(text) +
                    "' (expected exact, pade or quintic)");
}

ConstantsMode parse_constants_mode(std::string_view text) {
  if (text == "printed") return ConstantsMode::Printed;
  if (text == "full") return ConstantsMode::Full;
  throw ConfigError("unknown constants mode '" + std::string(text) +
                    "' (expected printed or full)");
}

bool SchemeSpec::starter_has_sine() const noexcept {
  return starter == Starter::Eq4 || starter == Starter::Eq5 ||
         starter == Starter::Eq6;
}

void SchemeSpec::validate() const {
  if (accel_steps < 0) {
    throw ConfigError(id + ": negative acceleration step count");
  }
  if (log_strategy == LogStrategy::PadeOneLog &&
      (accel_steps != 2 || accel_form != AccelForm::Direct)) {
    throw ConfigError(id +
                      ": one-log strategy needs exactly two direct steps");
  }
  if (!starter_has_sine() && sin_strategy != SinStrategy::Exact) {
    throw ConfigError(id + ": starter has no sine term");
  }
}

FrictionIterate starter_eq2(const FlowPoint& point) {
  const double re = point.re;
  const double k = point.rel_rough;
  if (!std::isfinite(re) || !std::isfinite(k)) {
    throw DomainError("Re and eps/D must be finite");
  }
  const double x = 4.34 * re / (re + 129000.0 * re * k + 7850000.0) +
                   781.0 * re / (187.0 * re + 133000.0 * re * k + 8960000.0) -
                   20.5 * k + 4.85;
  return {x, 0};
}

FrictionIterate starter_eq3(const NormalizedPoint& norm) {
  require_finite_norm(norm);
  if (norm.a == 0.0) {
    throw DomainError("eq3 starter undefined at a = log10(Re) = 0");
  }
  const double b = norm.b;
  return {3.13 * b - 1.56 * b * b / norm.a, 0};
}

double sine_argument(Starter starter, const NormalizedPoint& norm) {
  switch (starter) {
    case Starter::Eq4: return 0.937 * norm.a - norm.b;
    case Starter::Eq5: return 0.935 * norm.a - norm.b;
    case Starter::Eq6: return 0.939 * norm.a - norm.b;
    default:
      throw ConfigError("starter " + std::string(to_string(starter)) +
                        " has no sine term");
  }
}

SineValue evaluate_sine(double x, SinStrategy strategy) {
  switch (strategy) {
    case SinStrategy::Exact:
      return {std::sin(x), false};
    case SinStrategy::Pade: {
      const auto k = kernels::pade_sin_checked(x);
      return k.in_window ? SineValue{k.value, false}
                         : SineValue{std::sin(x), true};
    }
    case SinStrategy::Quintic: {
      const auto k = kernels::quintic_sin_checked(x);
      return k.in_window ? SineValue{k.value, false}
                         : SineValue{std::sin(x), true};
    }
  }
  return {std::sin(x), false};
}

FrictionIterate starter_eq4(const NormalizedPoint& norm, SinStrategy sin) {
  require_finite_norm(norm);
  const double a = norm.a;
  const double b = norm.b;
  const double s = evaluate_sine(sine_argument(Starter::Eq4, norm), sin).value;
  return {b + 0.904 * a + 1.08 * s - 1.85, 0};
}

FrictionIterate starter_eq5(const NormalizedPoint& norm, SinStrategy sin) {
  require_finite_norm(norm);
  const double a = norm.a;
  const double b = norm.b;
  const double s = evaluate_sine(sine_argument(Starter::Eq5, norm), sin).value;
  return {a + 0.61 * b + 0.28 * a * b + 0.51 * s - 0.894 - 0.103 * a * a -
              0.158 * b * b,
          0};
}

FrictionIterate starter_eq6(const NormalizedPoint& norm, SinStrategy sin) {
  require_finite_norm(norm);
  const double a = norm.a;
  const double b = norm.b;
  // one sine evaluation; the square reuses it
  const double s = evaluate_sine(sine_argument(Starter::Eq6, norm), sin).value;
  return {1.15 * a + 0.569 * b + 0.292 * a * b + 0.478 * s + 0.122 * s * s -
              1.284 - 0.12 * a * a - 0.162 * b * b,
          0};
}

FrictionIterate accelerate(const FlowPoint& point, const FrictionIterate& it) {
  return {colebrook_rhs(point, it.x), it.step + 1};
}

Theta theta(const FlowPoint& point, double x) {
  if (!(point.rel_rough > 0.0)) {
    throw DomainError("theta undefined for eps/D = 0");
  }
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("x = 1/sqrt(lambda) must be positive and finite");
  }
  return {-2.51 * 3.71 * x / (point.rel_rough * point.re)};
}

FrictionIterate accelerate_transformed(const FlowPoint& point,
                                       const FrictionIterate& it,
                                       ConstantsMode constants,
                                       std::optional<double> b) {
  if (!(point.rel_rough > 0.0)) {
    throw DomainError("transformed form does not work for eps/D = 0");
  }
  const double bb = b ? *b : normalize(point).b;
  const double t = theta(point, it.x).value;
  const bool printed = constants == ConstantsMode::Printed;
  const double offset = printed ? kPrintedOffset : kFullOffset;
  const double scale = printed ? kPrintedLnScale : kFullLnScale;
  return {offset + 2.0 * bb - scale * std::log(1.0 - t), it.step + 1};
}

namespace {

// Shared evaluation path; the kernel-audit fields are filled only when a
// trace is requested so the plain path stays free of extra work.
FrictionIterate run_scheme(const SchemeSpec& spec, const FlowPoint& point,
                           const EvalOptions& options, SchemeTrace* trace) {
  spec.validate();
  const SinStrategy sin = spec.starter_has_sine()
                              ? options.sin.value_or(spec.sin_strategy)
                              : SinStrategy::Exact;

  std::optional<double> b;
  FrictionIterate it;
  if (spec.starter == Starter::Eq2) {
    it = starter_eq2(point);
  } else {
    const NormalizedPoint norm = normalize(point);
    b = norm.b;
    switch (spec.starter) {
      case Starter::Eq3: it = starter_eq3(norm); break;
      case Starter::Eq4: it = starter_eq4(norm, sin); break;
      case Starter::Eq5: it = starter_eq5(norm, sin); break;
      case Starter::Eq6: it = starter_eq6(norm, sin); break;
      case Starter::Eq2: break;
    }
    if (trace != nullptr && spec.starter_has_sine()) {
      const double arg = sine_argument(spec.starter, norm);
      trace->sine_argument = arg;
      trace->sine_fallback = evaluate_sine(arg, sin).fallback;
    }
  }

  if (spec.accel_form == AccelForm::Transformed && !b && spec.accel_steps > 0) {
    b = normalize(point).b;  // computed once, shared by all steps
  }

  if (spec.log_strategy == LogStrategy::PadeOneLog) {
    const auto r = kernels::one_log_second_iteration(point, it.x);
    if (trace != nullptr) trace->pade_z = r.z;
    return r.iterate;
  }

  for (int i = 0; i < spec.accel_steps; ++i) {
    it = spec.accel_form == AccelForm::Direct
             ? accelerate(point, it)
             : accelerate_transformed(point, it, options.constants, b);
  }
  return it;
}

}  // namespace

SchemeTrace evaluate_scheme_traced(const SchemeSpec& spec,
                                   const FlowPoint& point,
                                   const EvalOptions& options) {
  SchemeTrace trace;
  trace.iterate = run_scheme(spec, point, options, &trace);
  return trace;
}

FrictionIterate evaluate_scheme(const SchemeSpec& spec, const FlowPoint& point,
                                const EvalOptions& options) {
  return run_scheme(spec, point, options, nullptr);
}

FrictionIterate evaluate_scheme(std::string_view id, const FlowPoint& point,
                                const EvalOptions& options) {
  return evaluate_scheme(SchemeRegistry::instance().find(id), point, options);
}

SchemeRegistry::SchemeRegistry() {
  using enum Starter;
  const auto add = [this](std::string id, Starter s, int steps,
                          AccelForm form = AccelForm::Direct,
                          LogStrategy log = LogStrategy::Exact) {
    SchemeSpec spec{std::move(id), s, steps, form, log, SinStrategy::Exact};
    spec.validate();
    specs_.push_back(std::move(spec));
  };
  add("eq2", Eq2, 0);
  add("eq2a1", Eq2, 1);
  add("eq2a2", Eq2, 2);
  add("eq2a2-pade", Eq2, 2, AccelForm::Direct, LogStrategy::PadeOneLog);
  add("eq3", Eq3, 0);
  add("eq3a", Eq3, 1);
  add("eq4", Eq4, 0);
  add("eq4a", Eq4, 1);
  add("eq5", Eq5, 0);
  add("eq5a", Eq5, 1);
  add("eq6", Eq6, 0);
  add("eq6a", Eq6, 1);
  add("eq2a1-t", Eq2, 1, AccelForm::Transformed);
  add("eq2a2-t", Eq2, 2, AccelForm::Transformed);
  add("eq3a-t", Eq3, 1, AccelForm::Transformed);
  add("eq4a-t", Eq4, 1, AccelForm::Transformed);
  add("eq5a-t", Eq5, 1, AccelForm::Transformed);
  add("eq6a-t", Eq6, 1, AccelForm::Transformed);
}

const SchemeRegistry& SchemeRegistry::instance() {
  static const SchemeRegistry registry;
  return registry;
}

const SchemeSpec& SchemeRegistry::find(std::string_view id) const {
  const auto it = std::find_if(specs_.begin(), specs_.end(),
                               [&](const SchemeSpec& s) { return s.id == id; });
  if (it == specs_.end()) {
    throw ConfigError("unknown scheme id '" + std::string(id) + "'");
  }
  return *it;
}

bool SchemeRegistry::contains(std::string_view id) const {
  return std::any_of(specs_.begin(), specs_.end(),
                     [&](const SchemeSpec& s) { return s.id == id; });
}

std::vector<std::string> SchemeRegistry::ids() const {
  std::vector<std::string> out;
  out.reserve(specs_.size());
  for (const auto& s : specs_) out.push_back(s.id);
  return out;
}

const std::vector<std::string>& SchemeRegistry::table1_ids() {
  static const std::vector<std::string> rows{
      "eq2a2", "eq6a", "eq5a", "eq2a1", "eq6", "eq5", "eq4a", "eq3a"};
  return rows;
}

}  // namespace colebrook
