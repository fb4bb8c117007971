#include "magent/paths.hpp"

#include "magent/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace magent {

namespace {

struct Accessor {
  std::function<void(SystemParams&, double)> set;
  std::function<double(const SystemParams&)> get;
};

Accessor hz(std::array<double, 2> SystemParams::*field, std::size_t j) {
  return {[=](SystemParams& p, double v) { (p.*field)[j] = kTwoPi * v; },
          [=](const SystemParams& p) { return (p.*field)[j] / kTwoPi; }};
}

Accessor hz_both(std::array<double, 2> SystemParams::*field) {
  return {[=](SystemParams& p, double v) { (p.*field)[0] = (p.*field)[1] = kTwoPi * v; },
          [=](const SystemParams& p) { return (p.*field)[0] / kTwoPi; }};
}

Accessor detuning(std::array<double, 2> SystemParams::*mode, std::size_t j) {
  return {[=](SystemParams& p, double v) { (p.*mode)[j] = p.omega_drive[j] + v * p.kappa_a[0]; },
          [=](const SystemParams& p) { return ((p.*mode)[j] - p.omega_drive[j]) / p.kappa_a[0]; }};
}

Accessor coupling(std::size_t j) {
  return {[=](SystemParams& p, double v) { p.g[j] = v * p.kappa_a[0]; },
          [=](const SystemParams& p) { return p.g[j] / p.kappa_a[0]; }};
}

Accessor coupling_both() {
  return {[](SystemParams& p, double v) { p.g[0] = p.g[1] = v * p.kappa_a[0]; },
          [](const SystemParams& p) { return p.g[0] / p.kappa_a[0]; }};
}

const std::map<std::string, Accessor, std::less<>>& registry() {
  static const std::map<std::string, Accessor, std::less<>> table = {
      {"freq_a1", hz(&SystemParams::omega_a, 0)},
      {"freq_a2", hz(&SystemParams::omega_a, 1)},
      {"freq_m1", hz(&SystemParams::omega_m, 0)},
      {"freq_m2", hz(&SystemParams::omega_m, 1)},
      {"freq_drive1", hz(&SystemParams::omega_drive, 0)},
      {"freq_drive2", hz(&SystemParams::omega_drive, 1)},
      {"kappa_a", hz_both(&SystemParams::kappa_a)},
      {"kappa_a1", hz(&SystemParams::kappa_a, 0)},
      {"kappa_a2", hz(&SystemParams::kappa_a, 1)},
      {"kappa_m", hz_both(&SystemParams::kappa_m)},
      {"kappa_m1", hz(&SystemParams::kappa_m, 0)},
      {"kappa_m2", hz(&SystemParams::kappa_m, 1)},
      {"delta_a1", detuning(&SystemParams::omega_a, 0)},
      {"delta_a2", detuning(&SystemParams::omega_a, 1)},
      {"delta_m1", detuning(&SystemParams::omega_m, 0)},
      {"delta_m2", detuning(&SystemParams::omega_m, 1)},
      {"g", coupling_both()},
      {"g/kappa_a", coupling_both()},
      {"g1", coupling(0)},
      {"g2", coupling(1)},
      {"g2/g1",
       {[](SystemParams& p, double v) { p.g[1] = v * p.g[0]; },
        [](const SystemParams& p) { return p.g[1] / p.g[0]; }}},
      {"kappa_m/kappa_a",
       {[](SystemParams& p, double v) { p.kappa_m[0] = p.kappa_m[1] = v * p.kappa_a[0]; },
        [](const SystemParams& p) { return p.kappa_m[0] / p.kappa_a[0]; }}},
      {"r", {[](SystemParams& p, double v) { p.r = v; }, [](const SystemParams& p) { return p.r; }}},
      {"theta",
       {[](SystemParams& p, double v) { p.theta = v; },
        [](const SystemParams& p) { return p.theta; }}},
      {"T",
       {[](SystemParams& p, double v) { p.temperature = v; },
        [](const SystemParams& p) { return p.temperature; }}},
  };
  return table;
}

const Accessor& lookup(std::string_view path) {
  const auto& table = registry();
  auto it = table.find(path);
  if (it == table.end()) {
    std::string valid;
    for (const auto& name : parameter_paths()) valid += (valid.empty() ? "" : ", ") + name;
    throw InvalidArgument("unknown parameter path '" + std::string(path) + "' (valid: " + valid + ")");
  }
  return it->second;
}

}  // namespace

const std::vector<std::string>& parameter_paths() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_parameter_path(std::string_view path) { return registry().contains(path); }

void set_parameter(SystemParams& params, std::string_view path, double value) {
  lookup(path).set(params, value);
}

double get_parameter(const SystemParams& params, std::string_view path) {
  return lookup(path).get(params);
}

std::vector<std::pair<std::string, double>> describe(const SystemParams& p) {
  static const char* order[] = {"freq_a1",  "freq_a2",  "freq_m1",  "freq_m2",  "freq_drive1",
                                "freq_drive2", "kappa_a1", "kappa_a2", "kappa_m1", "kappa_m2",
                                "g1",       "g2",       "r",        "theta",    "T"};
  std::vector<std::pair<std::string, double>> out;
  for (const char* name : order) out.emplace_back(name, get_parameter(p, name));
  return out;
}

}  // namespace magent
