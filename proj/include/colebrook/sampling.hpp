#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "colebrook/core.hpp"

namespace colebrook {

enum class Spacing { Log, Linear };

// Rectangular (Re, eps/D) mesh. Both endpoints of each axis are included.
struct GridSpec {
  double re_min = kReMin;
  double re_max = kReMax;
  double rough_min = 1.0e-6;
  double rough_max = kRelRoughMax;
  int n_re = 300;
  int n_rough = 300;
  Spacing re_spacing = Spacing::Log;
  Spacing rough_spacing = Spacing::Log;

  // Throws ConfigError unless bounds are positive, finite and ordered and
  // each axis has at least two points.
  void validate() const;
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(n_re) * static_cast<std::size_t>(n_rough);
  }
};

// Axis values, ascending.
std::vector<double> axis_values(double lo, double hi, int n, Spacing spacing);

// Points in rough-major order: index = i_rough * n_re + i_re.
std::vector<FlowPoint> build_grid(const GridSpec& spec);

// Two-dimensional Sobol sequence (first dimension van der Corput, second
// from the primitive polynomial x + 1), Gray-code ordered, 32-bit.
class Sobol2D {
 public:
  static constexpr int kBits = 32;

  Sobol2D();

  // Next point in [0, 1)^2; the first point is the origin.
  std::array<double, 2> next();
  void skip(std::uint64_t n);
  std::uint64_t index() const noexcept { return index_; }

  static const std::array<std::uint32_t, kBits>& directions(int dim);

 private:
  std::uint64_t index_ = 0;
  std::array<std::uint32_t, 2> state_{0, 0};
};

std::vector<std::array<double, 2>> sobol_unit(std::size_t n);

enum class SobolMapping {
  Uniform,     // uniform in raw Re and eps/D
  LogUniform,  // uniform in log10(Re) and log10(eps/D)
};

struct SobolDomain {
  double re_min = kReMin;
  double re_max = kReMax;
  double rough_min = 1.0e-6;
  double rough_max = kRelRoughMax;
  SobolMapping mapping = SobolMapping::Uniform;
};

std::vector<FlowPoint> sobol_2d(std::size_t n, const SobolDomain& domain = {});

}  // namespace colebrook
