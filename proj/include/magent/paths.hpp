#pragma once

// Named access to SystemParams fields for sweeps, config files and the CLI.
//
// Units by path:
//   freq_a1, freq_a2, freq_m1, freq_m2, freq_drive1, freq_drive2   Hz (omega / 2 pi)
//   kappa_a, kappa_a1, kappa_a2, kappa_m, kappa_m1, kappa_m2       Hz (kappa / 2 pi)
//   delta_a1, delta_a2, delta_m1, delta_m2                          units of kappa_a1
//   g, g1, g2, g/kappa_a                                            units of kappa_a1
//   kappa_m/kappa_a                                                 sets kappa_m1 = kappa_m2
//   g2/g1                                                           ratio, scales g2 from g1
//   r, theta (rad), T (K)
//
// Relative paths resolve against the value of kappa_a1 / g1 at the moment of
// assignment, so order matters when several paths are set.

#include "magent/model.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace magent {

const std::vector<std::string>& parameter_paths();
bool is_parameter_path(std::string_view path);

/// Throws InvalidArgument for unknown paths.
void set_parameter(SystemParams& params, std::string_view path, double value);
double get_parameter(const SystemParams& params, std::string_view path);

/// Human-unit snapshot of every field, in a fixed order.
std::vector<std::pair<std::string, double>> describe(const SystemParams& params);

}  // namespace magent
