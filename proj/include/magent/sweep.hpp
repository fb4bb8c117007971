#pragma once

// Declarative parameter sweeps, the figure presets and the survival
// temperature search.

#include "magent/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace magent {

inline constexpr const char* kVersion = "magent 0.1.0";
inline constexpr std::size_t kDefaultResolution2D = 61;
inline constexpr std::size_t kDefaultResolution1D = 121;

enum class Output { e_aa, e_mm, e_a1m1, e_a2m2, ratio_mm_aa, n_am, max_real_part };

std::string to_string(Output out);
Output parse_output(std::string_view name);

/// numerical: Lyapunov steady state at every cell.
/// analytic: closed forms in (kappa_m/kappa_a, g/kappa_a, r); needs zero
/// detunings and matched subsystems, and ignores temperature.
enum class Engine { numerical, analytic };

struct Axis {
  std::string path;
  std::vector<double> values;
};

struct SweepSpec {
  std::string name;
  SystemParams base;
  Axis axis1;
  std::optional<Axis> axis2;
  std::vector<Output> outputs;
  Engine engine = Engine::numerical;
};

struct CellResult {
  double axis1 = 0.0;
  double axis2 = 0.0;
  bool stable = false;
  /// One value per spec output; NaN on unstable cells.
  std::vector<double> values;
};

struct SweepGrid {
  SweepSpec spec;
  std::vector<CellResult> cells;  // row-major, axis1 outer
  std::string version = kVersion;

  std::size_t rows() const { return spec.axis1.values.size(); }
  std::size_t cols() const { return spec.axis2 ? spec.axis2->values.size() : 1; }
  bool is_2d() const { return spec.axis2.has_value(); }
  const CellResult& at(std::size_t i, std::size_t j = 0) const { return cells.at(i * cols() + j); }
  /// Index of `out` within spec.outputs; throws InvalidArgument if absent.
  std::size_t column(Output out) const;
};

struct RunOptions {
  unsigned threads = 1;
};

/// n evenly spaced points including both ends.
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// Throws InvalidArgument (before evaluating anything) on empty or
/// non-monotone axes, unknown paths or invalid cell parameters.
void validate(const SweepSpec& spec);

/// Parameters of cell (i, j): base, then axis1, then axis2 applied.
SystemParams cell_params(const SweepSpec& spec, std::size_t i, std::size_t j = 0);

/// Evaluates every cell; unstable cells are recorded, not fatal. Results are
/// assembled by grid index, so the output does not depend on `threads`.
SweepGrid run_sweep(const SweepSpec& spec, RunOptions options = {});

const std::vector<std::string>& preset_names();

/// Parameter set of a figure caption. `resolution` overrides the number of
/// points on continuous axes (defaults: 61 per axis in 2D, 121 in 1D).
SweepSpec figure_preset(std::string_view name, std::optional<std::size_t> resolution = {},
                        const SystemParams& base = baseline_params());

struct ThresholdResult {
  double temperature = 0.0;  // bracket midpoint
  double lower = 0.0;        // E_mm > 0 here
  double upper = 0.0;        // E_mm == 0 here
};

/// Bisection for the temperature above which E_mm vanishes. Returns nullopt
/// if the magnons are still entangled at t_max. Throws NoEntanglement when
/// E_mm is zero at T = 0.
std::optional<ThresholdResult> find_temperature_threshold(const SystemParams& base, double t_max,
                                                          double tol);

}  // namespace magent
