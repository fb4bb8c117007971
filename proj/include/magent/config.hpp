#pragma once

// Flat `section.key = value` configuration files. Blank lines and lines
// starting with '#' are ignored. Keys in the `params` section are parameter
// paths (see paths.hpp) applied to the baseline in file order.

#include "magent/model.hpp"

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace magent {

struct ConfigEntry {
  std::string section;
  std::string key;
  std::string value;
  int line = 0;
};

class Config {
 public:
  /// Throws InvalidArgument with the offending line number on malformed input.
  static Config parse(std::istream& in);
  /// Throws IoError if the file cannot be read.
  static Config load(const std::filesystem::path& path);

  const std::vector<ConfigEntry>& entries() const { return entries_; }

  /// Last value for `section.key`, if any.
  std::optional<std::string> get(std::string_view section, std::string_view key) const;

  /// Applies every `params.*` entry to `params`.
  void apply_params(SystemParams& params) const;

 private:
  std::vector<ConfigEntry> entries_;
};

/// Strict double parse of the whole string; throws InvalidArgument.
double parse_double(std::string_view text, std::string_view what);

/// Parses `path=value` (as passed to --param) and applies it.
void apply_assignment(SystemParams& params, std::string_view assignment);

}  // namespace magent
