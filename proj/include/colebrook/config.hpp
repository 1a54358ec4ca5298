#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "colebrook/sampling.hpp"
#include "colebrook/schemes.hpp"

namespace colebrook {

// Defaults shared by the command-line tools. Read from a flat
// `key = value` file with `#` comments:
//
//   re_min, re_max, rough_min, rough_max   grid bounds
//   n_re, n_rough                          points per axis
//   re_spacing, rough_spacing              log | linear
//   oracle_tol                             oracle tolerance on x
//   sin                                    exact | pade | quintic
//   constants                              printed | full
//   output_dir                             where scan files go
//   workers                                scan threads, 0 = all cores
struct CliConfig {
  GridSpec grid;
  double oracle_tol = 1.0e-12;
  SinStrategy sin = SinStrategy::Exact;
  ConstantsMode constants = ConstantsMode::Printed;
  std::string output_dir = ".";
  int workers = 1;

  void validate() const;
};

Spacing parse_spacing(std::string_view text);

// Applies the entries of `text` on top of `base`. Throws ConfigError with
// the offending line number.
CliConfig parse_config(std::string_view text, CliConfig base = {});
CliConfig load_config(const std::filesystem::path& path, CliConfig base = {});

}  // namespace colebrook
