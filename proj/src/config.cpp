#include "magent/config.hpp"

#include "magent/errors.hpp"
#include "magent/paths.hpp"

#include <charconv>
#include <fstream>

namespace magent {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

double parse_double(std::string_view text, std::string_view what) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InvalidArgument("invalid number '" + std::string(text) + "' for " + std::string(what));
  }
  return value;
}

Config Config::parse(std::istream& in) {
  Config cfg;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    const auto fail = [&](const char* why) {
      throw InvalidArgument("config line " + std::to_string(lineno) + ": " + why + ": '" +
                            std::string(line) + "'");
    };
    if (eq == std::string_view::npos) fail("expected 'section.key = value'");
    const auto lhs = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto dot = lhs.find('.');
    if (dot == std::string_view::npos || dot == 0 || dot + 1 == lhs.size()) {
      fail("key must be of the form section.key");
    }
    if (value.empty()) fail("missing value");
    cfg.entries_.push_back({std::string(lhs.substr(0, dot)), std::string(lhs.substr(dot + 1)),
                            std::string(value), lineno});
  }
  return cfg;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  return parse(in);
}

std::optional<std::string> Config::get(std::string_view section, std::string_view key) const {
  std::optional<std::string> found;
  for (const auto& e : entries_) {
    if (e.section == section && e.key == key) found = e.value;
  }
  return found;
}

void Config::apply_params(SystemParams& params) const {
  for (const auto& e : entries_) {
    if (e.section != "params") continue;
    try {
      set_parameter(params, e.key, parse_double(e.value, e.key));
    } catch (const InvalidArgument& err) {
      throw InvalidArgument("config line " + std::to_string(e.line) + ": " + err.what());
    }
  }
}

void apply_assignment(SystemParams& params, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw InvalidArgument("expected path=value, got '" + std::string(assignment) + "'");
  }
  const auto path = trim(assignment.substr(0, eq));
  set_parameter(params, path, parse_double(assignment.substr(eq + 1), path));
}

}  // namespace magent
