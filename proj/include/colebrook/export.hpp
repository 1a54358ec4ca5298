#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "colebrook/eval.hpp"

namespace colebrook {

inline constexpr const char* kCsvHeader =
    "re,rel_rough,lambda_ref,lambda_approx,rel_err_pct";

// Shortest decimal that parses back to the same double.
std::string format_double(double v);

// Header plus one row per entry, rough-major. Throws IoError.
void write_csv(const ErrorMap& map, std::ostream& out);
void export_csv(const ErrorMap& map, const std::filesystem::path& path);
std::vector<ErrorEntry> read_csv(std::istream& in);
std::vector<ErrorEntry> import_csv(const std::filesystem::path& path);

// Plain PGM (P2): one pixel per grid point, log10(Re) growing to the right,
// -log10(eps/D) growing upwards, grey level linear in the error and clipped
// at the map maximum.
void write_heatmap(const ErrorMap& map, std::ostream& out);
void export_heatmap(const ErrorMap& map, const std::filesystem::path& path);

}  // namespace colebrook
