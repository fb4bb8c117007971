#pragma once

// CSV and SVG writers for sweep grids. Output is byte-reproducible: no
// timestamps, fixed number formatting, fixed colormap.

#include "magent/sweep.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace magent {

/// Decimal with 9 significant digits; NaN as "NaN".
std::string format_value(double v);

/// `#` provenance lines, then `axis1[,axis2],<outputs>,stable`, then one row
/// per cell in row-major order. 1D grids have no axis2 column.
void emit_csv(const SweepGrid& grid, std::ostream& out);
/// Throws IoError if the destination cannot be written.
void emit_csv(const SweepGrid& grid, const std::filesystem::path& destination);

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

/// Colormap stops (viridis, 9 entries at t = 0, 1/8, ..., 1), interpolated
/// linearly and rounded to integer channels.
const std::array<Rgb, 9>& colormap_stops();
Rgb colormap(double t);
std::string to_hex(Rgb c);
/// NaN cells.
inline constexpr Rgb kMissingColor{0xbb, 0xbb, 0xbb};

/// Cell colors of `column`, row-major, normalized to the finite min/max of the
/// column (a constant column maps to the lowest color).
std::vector<Rgb> heatmap_colors(const SweepGrid& grid, Output column);

/// Density plot: axis1 runs left to right, axis2 bottom to top.
/// Throws InvalidArgument for 1D grids.
void emit_heatmap(const SweepGrid& grid, Output column, std::ostream& out);
void emit_heatmap(const SweepGrid& grid, Output column, const std::filesystem::path& destination);

/// Line plot of `column` against axis1, one polyline per axis2 value.
void emit_lineplot(const SweepGrid& grid, Output column, std::ostream& out);
void emit_lineplot(const SweepGrid& grid, Output column, const std::filesystem::path& destination);

}  // namespace magent
