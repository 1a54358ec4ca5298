#include "colebrook/kernels.hpp"

#include <cmath>

#include "colebrook/errors.hpp"

namespace colebrook::kernels {

namespace {

bool in_sin_window(double x) { return x > kSinWindowLo && x < kSinWindowHi; }

double log_argument(const FlowPoint& point, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("x = 1/sqrt(lambda) must be positive and finite");
  }
  const double y = 2.51 * x / point.re + point.rel_rough / 3.71;
  if (!(y > 0.0) || !std::isfinite(y)) {
    throw DomainError("Colebrook logarithm argument is not positive");
  }
  return y;
}

}  // namespace

double pade_ln(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw DomainError("pade_ln requires a positive finite argument");
  }
  // Horner nesting as printed; keep the evaluation order.
  const double num = z * (z * (11.0 * z + 27.0) - 27.0) - 11.0;
  const double den = z * (z * (3.0 * z + 27.0) + 27.0) + 3.0;
  return num / den;
}

KernelValue pade_ln_checked(double z) {
  return {pade_ln(z), z >= kLnWindowLo && z <= kLnWindowHi};
}

double pade_sin(double x) {
  const double x2 = x * x;
  return x * (60.0 - 7.0 * x2) / (60.0 + 3.0 * x2);
}

KernelValue pade_sin_checked(double x) { return {pade_sin(x), in_sin_window(x)}; }

double quintic_sin(double x) {
  const double x2 = x * x;
  const double x3 = x2 * x;
  const double x5 = x3 * x2;
  return x - x2 / 5350.6747 - x3 / 6.0171 + x5 / 127.4678;
}

KernelValue quintic_sin_checked(double x) {
  return {quintic_sin(x), in_sin_window(x)};
}

OneLogResult one_log_second_iteration(const FlowPoint& point, double x0) {
  const double y1 = log_argument(point, x0);
  const double log10_y1 = std::log10(y1);
  const double x1 = -2.0 * log10_y1;

  const double y2 = log_argument(point, x1);
  const double z = y1 / y2;
  const double log10_y2 = log10_y1 - pade_ln(z) / kLn10;

  OneLogResult out;
  out.iterate = FrictionIterate{-2.0 * log10_y2, 2};
  out.z = z;
  out.log10_y1 = log10_y1;
  return out;
}

}  // namespace colebrook::kernels
