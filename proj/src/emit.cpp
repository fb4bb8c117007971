#include "magent/emit.hpp"

#include "magent/errors.hpp"
#include "magent/paths.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

namespace magent {

namespace {

constexpr double kPlotX = 80, kPlotY = 40, kPlotW = 440, kPlotH = 440;
constexpr double kLegendX = 550, kLegendW = 24;
constexpr int kLegendSteps = 64;

std::string num(double v, const char* fmt = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_file(const std::filesystem::path& destination,
                const std::function<void(std::ostream&)>& body) {
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + destination.string() + "' for writing");
  body(file);
  file.flush();
  if (!file) throw IoError("write to '" + destination.string() + "' failed");
}

std::pair<double, double> finite_range(const SweepGrid& grid, std::size_t col) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& cell : grid.cells) {
    const double v = cell.values[col];
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!std::isfinite(lo)) return {0.0, 0.0};
  return {lo, hi};
}

void svg_header(std::ostream& out, double width, double height) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
}

void text(std::ostream& out, double x, double y, std::string_view s, const char* anchor = "middle",
          double rotate = 0.0) {
  out << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" text-anchor=\"" << anchor << '"';
  if (rotate != 0.0) out << " transform=\"rotate(" << num(rotate) << ' ' << num(x) << ' ' << num(y) << ")\"";
  out << '>' << escape(s) << "</text>\n";
}

void axis_labels(std::ostream& out, const SweepGrid& grid, Output column, const std::string& ylabel,
                 double ylo, double yhi) {
  const auto& a1 = grid.spec.axis1.values;
  text(out, kPlotX + kPlotW / 2, kPlotY - 14, grid.spec.name + ": " + to_string(column));
  text(out, kPlotX + kPlotW / 2, kPlotY + kPlotH + 36, grid.spec.axis1.path);
  text(out, kPlotX, kPlotY + kPlotH + 18, format_value(a1.front()), "start");
  text(out, kPlotX + kPlotW, kPlotY + kPlotH + 18, format_value(a1.back()), "end");
  text(out, kPlotX - 44, kPlotY + kPlotH / 2, ylabel, "middle", -90.0);
  text(out, kPlotX - 6, kPlotY + kPlotH, format_value(ylo), "end");
  text(out, kPlotX - 6, kPlotY + 12, format_value(yhi), "end");
  out << "<rect x=\"" << num(kPlotX) << "\" y=\"" << num(kPlotY) << "\" width=\"" << num(kPlotW)
      << "\" height=\"" << num(kPlotH) << "\" fill=\"none\" stroke=\"#000000\"/>\n";
}

}  // namespace

std::string format_value(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void emit_csv(const SweepGrid& grid, std::ostream& out) {
  if (grid.cells.empty()) throw InvalidArgument("emit_csv: empty grid");
  const auto& spec = grid.spec;
  out << "# " << grid.version << '\n';
  out << "# preset = " << spec.name << '\n';
  out << "# engine = " << (spec.engine == Engine::numerical ? "numerical" : "analytic") << '\n';
  out << "# axis1 = " << spec.axis1.path << '\n';
  if (spec.axis2) out << "# axis2 = " << spec.axis2->path << '\n';
  for (const auto& [name, value] : describe(spec.base)) {
    out << "# param." << name << " = " << format_value(value) << '\n';
  }
  out << "axis1";
  if (grid.is_2d()) out << ",axis2";
  for (auto o : spec.outputs) out << ',' << to_string(o);
  out << ",stable\n";
  for (const auto& cell : grid.cells) {
    out << format_value(cell.axis1);
    if (grid.is_2d()) out << ',' << format_value(cell.axis2);
    for (double v : cell.values) out << ',' << (cell.stable ? format_value(v) : "NaN");
    out << ',' << (cell.stable ? "true" : "false") << '\n';
  }
}

void emit_csv(const SweepGrid& grid, const std::filesystem::path& destination) {
  if (grid.cells.empty()) throw InvalidArgument("emit_csv: empty grid");
  write_file(destination, [&](std::ostream& out) { emit_csv(grid, out); });
}

const std::array<Rgb, 9>& colormap_stops() {
  static const std::array<Rgb, 9> stops = {{{0x44, 0x01, 0x54},
                                            {0x47, 0x2d, 0x7b},
                                            {0x3b, 0x52, 0x8b},
                                            {0x2c, 0x72, 0x8e},
                                            {0x21, 0x91, 0x8c},
                                            {0x28, 0xae, 0x80},
                                            {0x5e, 0xc9, 0x62},
                                            {0xad, 0xdc, 0x30},
                                            {0xfd, 0xe7, 0x25}}};
  return stops;
}

Rgb colormap(double t) {
  if (std::isnan(t)) return kMissingColor;
  const auto& stops = colormap_stops();
  t = std::clamp(t, 0.0, 1.0) * static_cast<double>(stops.size() - 1);
  const auto k = std::min(static_cast<std::size_t>(t), stops.size() - 2);
  const double f = t - static_cast<double>(k);
  auto mix = [f](std::uint8_t a, std::uint8_t b) {
    return static_cast<std::uint8_t>(std::lround(a + f * (static_cast<double>(b) - a)));
  };
  return {mix(stops[k].r, stops[k + 1].r), mix(stops[k].g, stops[k + 1].g),
          mix(stops[k].b, stops[k + 1].b)};
}

std::string to_hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

std::vector<Rgb> heatmap_colors(const SweepGrid& grid, Output column) {
  const auto col = grid.column(column);
  const auto [lo, hi] = finite_range(grid, col);
  std::vector<Rgb> colors;
  colors.reserve(grid.cells.size());
  for (const auto& cell : grid.cells) {
    const double v = cell.values[col];
    if (!cell.stable || !std::isfinite(v)) {
      colors.push_back(kMissingColor);
    } else {
      colors.push_back(colormap(hi > lo ? (v - lo) / (hi - lo) : 0.0));
    }
  }
  return colors;
}

void emit_heatmap(const SweepGrid& grid, Output column, std::ostream& out) {
  if (!grid.is_2d()) {
    throw InvalidArgument("emit_heatmap: grid '" + grid.spec.name +
                          "' is one-dimensional; use emit_lineplot");
  }
  const auto colors = heatmap_colors(grid, column);
  const auto [lo, hi] = finite_range(grid, grid.column(column));
  const std::size_t rows = grid.rows(), cols = grid.cols();
  const double cw = kPlotW / static_cast<double>(rows);
  const double ch = kPlotH / static_cast<double>(cols);

  svg_header(out, 640, 540);
  out << "<g shape-rendering=\"crispEdges\">\n";
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double x = kPlotX + cw * static_cast<double>(i);
      const double y = kPlotY + kPlotH - ch * static_cast<double>(j + 1);
      out << "<rect x=\"" << num(x, "%.3f") << "\" y=\"" << num(y, "%.3f") << "\" width=\""
          << num(cw + 0.01, "%.3f") << "\" height=\"" << num(ch + 0.01, "%.3f") << "\" fill=\""
          << to_hex(colors[i * cols + j]) << "\"/>\n";
    }
  }
  out << "</g>\n";
  const auto& a2 = grid.spec.axis2->values;
  axis_labels(out, grid, column, grid.spec.axis2->path, a2.front(), a2.back());

  // Legend, low values at the bottom.
  const double step = kPlotH / kLegendSteps;
  out << "<g shape-rendering=\"crispEdges\">\n";
  for (int k = 0; k < kLegendSteps; ++k) {
    const double t = (k + 0.5) / kLegendSteps;
    out << "<rect x=\"" << num(kLegendX) << "\" y=\""
        << num(kPlotY + kPlotH - step * (k + 1), "%.3f") << "\" width=\"" << num(kLegendW)
        << "\" height=\"" << num(step + 0.01, "%.3f") << "\" fill=\"" << to_hex(colormap(t))
        << "\"/>\n";
  }
  out << "</g>\n";
  text(out, kLegendX + kLegendW + 4, kPlotY + kPlotH, format_value(lo), "start");
  text(out, kLegendX + kLegendW + 4, kPlotY + 12, format_value(hi), "start");
  text(out, kLegendX + kLegendW / 2, kPlotY - 14, to_string(column));
  out << "</svg>\n";
}

void emit_heatmap(const SweepGrid& grid, Output column, const std::filesystem::path& destination) {
  if (!grid.is_2d()) {
    throw InvalidArgument("emit_heatmap: grid '" + grid.spec.name +
                          "' is one-dimensional; use emit_lineplot");
  }
  grid.column(column);
  write_file(destination, [&](std::ostream& out) { emit_heatmap(grid, column, out); });
}

void emit_lineplot(const SweepGrid& grid, Output column, std::ostream& out) {
  const auto col = grid.column(column);
  auto [lo, hi] = finite_range(grid, col);
  if (hi <= lo) hi = lo + 1.0;
  const auto& a1 = grid.spec.axis1.values;
  const double xlo = a1.front(), xhi = a1.size() > 1 ? a1.back() : a1.front() + 1.0;

  svg_header(out, 640, 540);
  for (std::size_t j = 0; j < grid.cols(); ++j) {
    const double t = grid.cols() > 1 ? static_cast<double>(j) / static_cast<double>(grid.cols() - 1) : 0.0;
    std::string points;
    for (std::size_t i = 0; i < grid.rows(); ++i) {
      const auto& cell = grid.at(i, j);
      const double v = cell.values[col];
      if (!cell.stable || !std::isfinite(v)) continue;
      const double x = kPlotX + kPlotW * (cell.axis1 - xlo) / (xhi - xlo);
      const double y = kPlotY + kPlotH - kPlotH * (v - lo) / (hi - lo);
      points += (points.empty() ? "" : " ") + num(x, "%.3f") + "," + num(y, "%.3f");
    }
    out << "<polyline fill=\"none\" stroke-width=\"2\" stroke=\"" << to_hex(colormap(0.85 * t))
        << "\" points=\"" << points << "\"/>\n";
    if (grid.is_2d()) {
      text(out, kLegendX, kPlotY + 16.0 * static_cast<double>(j + 1),
           grid.spec.axis2->path + " = " + format_value(grid.spec.axis2->values[j]), "start");
    }
  }
  axis_labels(out, grid, column, to_string(column), lo, hi);
  out << "</svg>\n";
}

void emit_lineplot(const SweepGrid& grid, Output column, const std::filesystem::path& destination) {
  write_file(destination, [&](std::ostream& out) { emit_lineplot(grid, column, out); });
}

}  // namespace magent
