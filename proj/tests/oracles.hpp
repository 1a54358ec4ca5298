#pragma once

// Test-only reference routes, independent of the library's evaluation
// paths.

#include <cmath>

namespace colebrook::testing {

// Colebrook residual g(x) = x + 2 log10(2.51 x / Re + k / 3.71) in long
// double; increasing in x.
inline long double colebrook_residual(long double re, long double k,
                                      long double x) {
  return x + 2.0L * std::log10(2.51L * x / re + k / 3.71L);
}

// Bisection on g over (1, 20) down to an interval of 1e-14.
inline long double bisect_colebrook_x(double re, double k) {
  long double lo = 1.0L;
  long double hi = 20.0L;
  while (hi - lo > 1.0e-14L) {
    const long double mid = 0.5L * (lo + hi);
    if (colebrook_residual(re, k, mid) < 0.0L) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

inline double bisect_colebrook_lambda(double re, double k) {
  const long double x = bisect_colebrook_x(re, k);
  return static_cast<double>(1.0L / (x * x));
}

}  // namespace colebrook::testing
