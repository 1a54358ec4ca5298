#include "colebrook/sampling.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "colebrook/errors.hpp"

namespace colebrook {

namespace {

void check_axis(double lo, double hi, int n, const char* name) {
  const std::string axis(name);
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw ConfigError(axis + " bounds must be finite");
  }
  if (!(lo > 0.0)) {
    throw ConfigError(axis + " lower bound must be positive");
  }
  if (!(hi > lo)) {
    throw ConfigError(axis + " upper bound must exceed lower bound");
  }
  if (n < 2) {
    throw ConfigError(axis + " needs at least 2 points");
  }
}

std::array<std::uint32_t, Sobol2D::kBits> make_directions(int dim) {
  std::array<std::uint32_t, Sobol2D::kBits> v{};
  if (dim == 0) {
    for (int k = 0; k < Sobol2D::kBits; ++k) v[k] = 1u << (31 - k);
  } else {
    // x + 1: degree 1, m_1 = 1, v_k = v_{k-1} ^ (v_{k-1} >> 1)
    v[0] = 1u << 31;
    for (int k = 1; k < Sobol2D::kBits; ++k) v[k] = v[k - 1] ^ (v[k - 1] >> 1);
  }
  return v;
}

constexpr double kTwoPow32 = 4294967296.0;

}  // namespace

void GridSpec::validate() const {
  check_axis(re_min, re_max, n_re, "Re");
  check_axis(rough_min, rough_max, n_rough, "eps/D");
}

std::vector<double> axis_values(double lo, double hi, int n, Spacing spacing) {
  std::vector<double> v(static_cast<std::size_t>(n));
  const double last = static_cast<double>(n - 1);
  if (spacing == Spacing::Log) {
    const double llo = std::log(lo);
    const double step = (std::log(hi) - llo) / last;
    for (int i = 0; i < n; ++i) v[i] = std::exp(llo + step * i);
  } else {
    const double step = (hi - lo) / last;
    for (int i = 0; i < n; ++i) v[i] = lo + step * i;
  }
  v.front() = lo;
  v.back() = hi;
  return v;
}

std::vector<FlowPoint> build_grid(const GridSpec& spec) {
  spec.validate();
  const auto re = axis_values(spec.re_min, spec.re_max, spec.n_re,
                              spec.re_spacing);
  const auto rough = axis_values(spec.rough_min, spec.rough_max, spec.n_rough,
                                 spec.rough_spacing);
  std::vector<FlowPoint> points;
  points.reserve(spec.size());
  for (double k : rough) {
    for (double r : re) {
      points.push_back(FlowPoint::make(r, k, DomainPolicy::Flag));
    }
  }
  return points;
}

const std::array<std::uint32_t, Sobol2D::kBits>& Sobol2D::directions(int dim) {
  static const auto d0 = make_directions(0);
  static const auto d1 = make_directions(1);
  return dim == 0 ? d0 : d1;
}

Sobol2D::Sobol2D() = default;

std::array<double, 2> Sobol2D::next() {
  std::array<double, 2> out{state_[0] / kTwoPow32, state_[1] / kTwoPow32};
  // Gray-code update: flip the direction of the lowest zero bit of index.
  const int c = std::countr_one(index_);
  if (c >= kBits) {
    throw ConfigError("Sobol sequence exhausted (2^32 points)");
  }
  state_[0] ^= directions(0)[c];
  state_[1] ^= directions(1)[c];
  ++index_;
  return out;
}

void Sobol2D::skip(std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) next();
}

std::vector<std::array<double, 2>> sobol_unit(std::size_t n) {
  Sobol2D gen;
  std::vector<std::array<double, 2>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(gen.next());
  return out;
}

std::vector<FlowPoint> sobol_2d(std::size_t n, const SobolDomain& domain) {
  if (n < 1) {
    throw ConfigError("Sobol sample size must be at least 1");
  }
  check_axis(domain.re_min, domain.re_max, 2, "Re");
  check_axis(domain.rough_min, domain.rough_max, 2, "eps/D");

  const auto unit = sobol_unit(n);
  std::vector<FlowPoint> out;
  out.reserve(n);
  for (const auto& u : unit) {
    double re = 0.0;
    double rough = 0.0;
    if (domain.mapping == SobolMapping::Uniform) {
      re = domain.re_min + u[0] * (domain.re_max - domain.re_min);
      rough = domain.rough_min + u[1] * (domain.rough_max - domain.rough_min);
    } else {
      const double lre = std::log(domain.re_min);
      const double lk = std::log(domain.rough_min);
      re = std::exp(lre + u[0] * (std::log(domain.re_max) - lre));
      rough = std::exp(lk + u[1] * (std::log(domain.rough_max) - lk));
    }
    out.push_back(FlowPoint::make(re, rough, DomainPolicy::Flag));
  }
  return out;
}

}  // namespace colebrook
