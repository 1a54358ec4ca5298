#include "colebrook/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "colebrook/errors.hpp"

namespace colebrook {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view value, const std::string& where) {
  T v{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(where + ": cannot parse '" + std::string(value) + "'");
  }
  return v;
}

}  // namespace

void CliConfig::validate() const {
  grid.validate();
  if (!(oracle_tol > 0.0)) {
    throw ConfigError("oracle_tol must be positive");
  }
  if (workers < 0) {
    throw ConfigError("workers must be non-negative");
  }
}

Spacing parse_spacing(std::string_view text) {
  if (text == "log") return Spacing::Log;
  if (text == "linear") return Spacing::Linear;
  throw ConfigError("unknown spacing '" + std::string(text) +
                    "' (expected log or linear)");
}

CliConfig parse_config(std::string_view text, CliConfig base) {
  CliConfig cfg = std::move(base);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = "config line " + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(where + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError(where + ": empty key or value");
    }

    try {
      if (key == "re_min") cfg.grid.re_min = parse_number<double>(value, where);
      else if (key == "re_max") cfg.grid.re_max = parse_number<double>(value, where);
      else if (key == "rough_min") cfg.grid.rough_min = parse_number<double>(value, where);
      else if (key == "rough_max") cfg.grid.rough_max = parse_number<double>(value, where);
      else if (key == "n_re") cfg.grid.n_re = parse_number<int>(value, where);
      else if (key == "n_rough") cfg.grid.n_rough = parse_number<int>(value, where);
      else if (key == "re_spacing") cfg.grid.re_spacing = parse_spacing(value);
      else if (key == "rough_spacing") cfg.grid.rough_spacing = parse_spacing(value);
      else if (key == "oracle_tol") cfg.oracle_tol = parse_number<double>(value, where);
      else if (key == "sin") cfg.sin = parse_sin_strategy(value);
      else if (key == "constants") cfg.constants = parse_constants_mode(value);
      else if (key == "output_dir") cfg.output_dir = std::string(value);
      else if (key == "workers") cfg.workers = parse_number<int>(value, where);
      else throw ConfigError("unknown key '" + std::string(key) + "'");
    } catch (const ConfigError& e) {
      const std::string msg = e.what();
      if (msg.rfind("config line", 0) == 0) throw;
      throw ConfigError(where + ": " + msg);
    }
  }
  cfg.validate();
  return cfg;
}

CliConfig load_config(const std::filesystem::path& path, CliConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

}  // namespace colebrook
