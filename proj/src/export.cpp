#include "colebrook/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "colebrook/errors.hpp"

namespace colebrook {

namespace {

constexpr int kMaxGrey = 255;
constexpr int kPixelsPerLine = 17;  // keeps plain PGM lines under 70 chars

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  return out;
}

double parse_double(std::string_view field, std::size_t line_no) {
  double v = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw IoError("malformed number '" + std::string(field) + "' on line " +
                  std::to_string(line_no));
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_csv(const ErrorMap& map, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& e : map.entries) {
    out << format_double(e.re) << ',' << format_double(e.rel_rough) << ','
        << format_double(e.lambda_ref) << ',' << format_double(e.lambda_approx)
        << ',' << format_double(e.rel_err_pct) << '\n';
  }
}

void export_csv(const ErrorMap& map, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_csv(map, out);
  if (!out) {
    throw IoError("write to '" + path.string() + "' failed");
  }
}

std::vector<ErrorEntry> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw IoError("missing or unexpected CSV header");
  }
  std::vector<ErrorEntry> entries;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    double f[5];
    std::size_t start = 0;
    for (int k = 0; k < 5; ++k) {
      const std::size_t comma = line.find(',', start);
      if ((k < 4) == (comma == std::string::npos)) {
        throw IoError("expected 5 fields on line " + std::to_string(line_no));
      }
      const std::size_t stop = k < 4 ? comma : line.size();
      f[k] = parse_double(std::string_view(line).substr(start, stop - start),
                          line_no);
      start = stop + 1;
    }
    entries.push_back(ErrorEntry{f[0], f[1], f[2], f[3], f[4]});
  }
  return entries;
}

std::vector<ErrorEntry> import_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  return read_csv(in);
}

void write_heatmap(const ErrorMap& map, std::ostream& out) {
  const int w = map.grid.n_re;
  const int h = map.grid.n_rough;
  if (map.entries.size() != map.grid.size()) {
    throw IoError("error map does not match its grid");
  }
  double max_err = 0.0;
  for (const auto& e : map.entries) max_err = std::max(max_err, e.rel_err_pct);

  out << "P2\n" << w << ' ' << h << '\n' << kMaxGrey << '\n';
  // Row 0 is the top of the image, i.e. the largest -log10(eps/D), which is
  // the first roughness row of the ascending grid.
  for (int row = 0; row < h; ++row) {
    for (int col = 0; col < w; ++col) {
      const double e = map.entries[static_cast<std::size_t>(row) * w + col]
                           .rel_err_pct;
      int grey = 0;
      if (max_err > 0.0) {
        grey = static_cast<int>(std::lround(kMaxGrey * std::min(e, max_err) /
                                            max_err));
      }
      out << grey;
      const bool end_of_row = col + 1 == w;
      out << ((end_of_row || (col + 1) % kPixelsPerLine == 0) ? '\n' : ' ');
    }
  }
}

void export_heatmap(const ErrorMap& map, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_heatmap(map, out);
  if (!out) {
    throw IoError("write to '" + path.string() + "' failed");
  }
}

}  // namespace colebrook
