#pragma once

#include "colebrook/core.hpp"

// Rational and polynomial stand-ins for ln and sin, and the one-log second
// fixed-point step built on the rational logarithm.
namespace colebrook::kernels {

inline constexpr double kLn10 = 2.302585092994046;

// Window on which the sine replacements carry their published error bounds.
inline constexpr double kSinWindowLo = -0.08821;
inline constexpr double kSinWindowHi = 1.18456;

// Range of z on which the rational logarithm is trusted.
inline constexpr double kLnWindowLo = 0.5;
inline constexpr double kLnWindowHi = 2.0;

// Kernel output plus whether the argument was inside the accuracy window.
struct KernelValue {
  double value = 0.0;
  bool in_window = true;
};

// ln(z) ~ (z(z(11z + 27) - 27) - 11) / (z(z(3z + 27) + 27) + 3).
// Throws DomainError for z <= 0.
double pade_ln(double z);
KernelValue pade_ln_checked(double z);

// sin(x) ~ x (60 - 7x^2) / (60 + 3x^2)
double pade_sin(double x);
KernelValue pade_sin_checked(double x);

// sin(x) ~ x - x^2/5350.6747 - x^3/6.0171 + x^5/127.4678, as published.
// The x^2 term makes it not odd.
double quintic_sin(double x);
KernelValue quintic_sin_checked(double x);

struct OneLogResult {
  FrictionIterate iterate;  // step 2
  double z = 1.0;           // y1 / y2 fed to pade_ln
  double log10_y1 = 0.0;    // the single evaluated logarithm
};

// Two fixed-point steps from x0 with a single real logarithm:
//   x1 = -2 log10(y1),
//   log10(y2) = log10(y1) - pade_ln(y1 / y2) / ln 10,
//   x2 = -2 log10(y2).
OneLogResult one_log_second_iteration(const FlowPoint& point, double x0);

}  // namespace colebrook::kernels
