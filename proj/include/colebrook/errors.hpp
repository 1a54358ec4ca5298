#pragma once

#include <stdexcept>
#include <string>

namespace colebrook {

// Input outside the mathematical domain of an operation (non-finite values,
// negative roughness, logarithm of a non-positive argument, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Fixed-point iteration did not reach the requested tolerance.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double last_x, int iterations)
      : std::runtime_error(what), last_x_(last_x), iterations_(iterations) {}

  double last_x() const noexcept { return last_x_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double last_x_;
  int iterations_;
};

// Invalid grid, config file entry or unknown scheme id.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace colebrook
