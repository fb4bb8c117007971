#include "magent/sweep.hpp"

#include "magent/analytic.hpp"
#include "magent/errors.hpp"
#include "magent/paths.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace magent {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct OutputName {
  Output out;
  const char* name;
};

constexpr OutputName kOutputNames[] = {
    {Output::e_aa, "E_aa"},           {Output::e_mm, "E_mm"},
    {Output::e_a1m1, "E_a1m1"},       {Output::e_a2m2, "E_a2m2"},
    {Output::ratio_mm_aa, "E_mm/E_aa"}, {Output::n_am, "N_am"},
    {Output::max_real_part, "max_real_part"},
};

void validate_axis(const Axis& axis, const char* which) {
  if (!is_parameter_path(axis.path)) {
    // Re-raise through the path registry for its list of valid names.
    SystemParams scratch;
    set_parameter(scratch, axis.path, 0.0);
  }
  if (axis.values.empty()) throw InvalidArgument(std::string(which) + ": empty value list");
  bool inc = true, dec = true;
  for (std::size_t k = 1; k < axis.values.size(); ++k) {
    inc = inc && axis.values[k] > axis.values[k - 1];
    dec = dec && axis.values[k] < axis.values[k - 1];
  }
  if (axis.values.size() > 1 && !inc && !dec) {
    throw InvalidArgument(std::string(which) + " '" + axis.path + "': values not strictly monotone");
  }
}

bool close(double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(std::abs(x), std::abs(y)); }

void require_analytic_regime(const SystemParams& p) {
  for (std::size_t j = 0; j < 2; ++j) {
    if (std::abs(p.delta_a(j)) > 1e-12 * p.kappa_a[0] || std::abs(p.delta_m(j)) > 1e-12 * p.kappa_a[0]) {
      throw InvalidArgument("analytic engine requires zero detunings");
    }
  }
  if (!close(p.g[0], p.g[1]) || !close(p.kappa_a[0], p.kappa_a[1]) ||
      !close(p.kappa_m[0], p.kappa_m[1])) {
    throw InvalidArgument("analytic engine requires matched couplings and decay rates");
  }
}

bool wants(const SweepSpec& spec, Output out) {
  return std::find(spec.outputs.begin(), spec.outputs.end(), out) != spec.outputs.end();
}

double ratio(double num, double den) { return den > 0.0 ? num / den : kNaN; }

CellResult evaluate_numerical(const SweepSpec& spec, const SystemParams& p) {
  const auto report = entanglement_report(p);
  CellResult cell;
  cell.stable = report.entanglement.has_value();
  for (auto out : spec.outputs) {
    if (!cell.stable) {
      cell.values.push_back(kNaN);
      continue;
    }
    const auto& e = *report.entanglement;
    switch (out) {
      case Output::e_aa: cell.values.push_back(e.e_aa); break;
      case Output::e_mm: cell.values.push_back(e.e_mm); break;
      case Output::e_a1m1: cell.values.push_back(e.e_a1m1); break;
      case Output::e_a2m2: cell.values.push_back(e.e_a2m2); break;
      case Output::ratio_mm_aa: cell.values.push_back(ratio(e.e_mm, e.e_aa)); break;
      case Output::n_am: cell.values.push_back(e.n_a1m1); break;
      case Output::max_real_part: cell.values.push_back(report.stability.max_real_part); break;
    }
  }
  return cell;
}

CellResult evaluate_analytic(const SweepSpec& spec, const SystemParams& p) {
  const auto stab = stability(build_drift(p));
  CellResult cell;
  cell.stable = stab.stable;
  if (!cell.stable) {
    cell.values.assign(spec.outputs.size(), kNaN);
    return cell;
  }
  const ReducedParams rp{p.kappa_m[0] / p.kappa_a[0], p.g[0] / p.kappa_a[0], p.r};

  double e_aa = kNaN, e_mm = kNaN, e_am = kNaN;
  if (wants(spec, Output::e_aa) || wants(spec, Output::ratio_mm_aa)) {
    if (rp.b == 0.0) {
      e_aa = eaa_analytic(rp.r);
    } else {
      // No closed form for the coupled cavity pair; use the N_m = 0 steady state.
      SystemParams cold = p;
      cold.temperature = 0.0;
      e_aa = log_negativity(reduce(steady_state_cm(cold), {kCavity1, kCavity2}));
    }
  }
  if (wants(spec, Output::e_mm) || wants(spec, Output::ratio_mm_aa)) {
    e_mm = log_negativity(vmm_analytic(rp));
  }
  if (wants(spec, Output::e_a1m1) || wants(spec, Output::e_a2m2)) {
    e_am = log_negativity(vam_analytic(rp));
  }
  for (auto out : spec.outputs) {
    switch (out) {
      case Output::e_aa: cell.values.push_back(e_aa); break;
      case Output::e_mm: cell.values.push_back(e_mm); break;
      case Output::e_a1m1:
      case Output::e_a2m2: cell.values.push_back(e_am); break;
      case Output::ratio_mm_aa: cell.values.push_back(ratio(e_mm, e_aa)); break;
      case Output::n_am: cell.values.push_back(cavity_magnon_N(rp)); break;
      case Output::max_real_part: cell.values.push_back(stab.max_real_part); break;
    }
  }
  return cell;
}

}  // namespace

std::string to_string(Output out) {
  for (const auto& [o, name] : kOutputNames) {
    if (o == out) return name;
  }
  return "?";
}

Output parse_output(std::string_view name) {
  for (const auto& [o, n] : kOutputNames) {
    if (name == n) return o;
  }
  throw InvalidArgument("unknown output column '" + std::string(name) + "'");
}

std::size_t SweepGrid::column(Output out) const {
  for (std::size_t k = 0; k < spec.outputs.size(); ++k) {
    if (spec.outputs[k] == out) return k;
  }
  throw InvalidArgument("grid has no column " + to_string(out));
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) throw InvalidArgument("linspace: need at least one point");
  if (n == 1) return {lo};
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  }
  out.back() = hi;
  return out;
}

SystemParams cell_params(const SweepSpec& spec, std::size_t i, std::size_t j) {
  SystemParams p = spec.base;
  set_parameter(p, spec.axis1.path, spec.axis1.values.at(i));
  if (spec.axis2) set_parameter(p, spec.axis2->path, spec.axis2->values.at(j));
  return p;
}

void validate(const SweepSpec& spec) {
  validate_axis(spec.axis1, "axis1");
  if (spec.axis2) validate_axis(*spec.axis2, "axis2");
  if (spec.outputs.empty()) throw InvalidArgument("sweep: no output columns requested");
  const std::size_t cols = spec.axis2 ? spec.axis2->values.size() : 1;
  for (std::size_t i = 0; i < spec.axis1.values.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto p = cell_params(spec, i, j);
      validate(p);
      if (spec.engine == Engine::analytic) require_analytic_regime(p);
    }
  }
}

SweepGrid run_sweep(const SweepSpec& spec, RunOptions options) {
  validate(spec);
  SweepGrid grid;
  grid.spec = spec;
  const std::size_t rows = grid.rows(), cols = grid.cols();
  grid.cells.resize(rows * cols);

  auto evaluate = [&](std::size_t index) {
    const std::size_t i = index / cols, j = index % cols;
    const auto p = cell_params(spec, i, j);
    CellResult cell = spec.engine == Engine::numerical ? evaluate_numerical(spec, p)
                                                       : evaluate_analytic(spec, p);
    cell.axis1 = spec.axis1.values[i];
    cell.axis2 = spec.axis2 ? spec.axis2->values[j] : 0.0;
    grid.cells[index] = std::move(cell);
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    for (std::size_t k = 0; k < grid.cells.size(); ++k) evaluate(k);
    return grid;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < grid.cells.size(); k = next++) {
          try {
            evaluate(k);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig2a", "fig2b", "fig2c", "fig3a", "fig3b",
                                                 "fig4",  "fig5a", "fig5b", "fig6"};
  return names;
}

SweepSpec figure_preset(std::string_view name, std::optional<std::size_t> resolution,
                        const SystemParams& base) {
  if (resolution && *resolution < 2) throw InvalidArgument("resolution must be at least 2");
  const std::size_t n2 = resolution.value_or(kDefaultResolution2D);
  const std::size_t n1 = resolution.value_or(kDefaultResolution1D);

  SweepSpec spec;
  spec.name = std::string(name);
  spec.base = base;
  auto& p = spec.base;
  auto set = [&p](std::string_view path, double v) { set_parameter(p, path, v); };
  auto resonant = [&] {
    for (const char* path : {"delta_a1", "delta_a2", "delta_m1", "delta_m2"}) set(path, 0.0);
  };
  set("theta", 0.0);

  if (name == "fig2a" || name == "fig2b") {
    const bool first = name == "fig2a";
    resonant();
    set("r", 1.0);
    set("T", 0.1);
    spec.axis1 = {first ? "delta_a1" : "delta_a2", linspace(-1.0, 1.0, n2)};
    spec.axis2 = Axis{first ? "delta_m1" : "delta_m2", linspace(-1.0, 1.0, n2)};
    spec.outputs = {Output::e_mm};
  } else if (name == "fig2c") {
    resonant();
    spec.axis1 = {"r", linspace(0.0, 2.0, n2)};
    spec.axis2 = Axis{"T", linspace(0.0, 1.0, n2)};
    spec.outputs = {Output::e_mm};
  } else if (name == "fig3a") {
    resonant();
    set("g", 5.0);
    set("T", 0.1);
    spec.axis1 = {"r", linspace(0.0, 2.0, n2)};
    spec.axis2 = Axis{"g2/g1", linspace(0.0, 2.0, n2)};
    spec.outputs = {Output::e_mm};
  } else if (name == "fig3b") {
    resonant();
    set("T", 0.1);
    // r = 0 is dropped: the ratio is 0/0 there.
    auto r = linspace(0.0, 2.0, n1);
    r.erase(r.begin());
    spec.axis1 = {"r", std::move(r)};
    spec.axis2 = Axis{"g", {0.5, 1.0, 2.0}};
    spec.outputs = {Output::ratio_mm_aa, Output::e_mm, Output::e_aa};
  } else if (name == "fig4") {
    resonant();
    set("g", 0.0);
    spec.axis1 = {"r", linspace(0.0, 2.0, n1)};
    spec.outputs = {Output::e_aa};
    spec.engine = Engine::analytic;
  } else if (name == "fig5a" || name == "fig5b" || name == "fig6") {
    resonant();
    set("r", 1.0);
    spec.axis1 = {"kappa_m/kappa_a", linspace(0.01, 1.0, n2)};
    spec.axis2 = Axis{"g/kappa_a", linspace(0.0, 10.0, n2)};
    if (name == "fig5a") {
      spec.outputs = {Output::e_aa};
    } else if (name == "fig5b") {
      spec.outputs = {Output::e_mm};
    } else {
      spec.outputs = {Output::n_am, Output::e_a1m1, Output::e_a2m2};
    }
    spec.engine = Engine::analytic;
  } else {
    std::string valid;
    for (const auto& n : preset_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw InvalidArgument("unknown preset '" + std::string(name) + "' (valid: " + valid + ")");
  }
  return spec;
}

std::optional<ThresholdResult> find_temperature_threshold(const SystemParams& base, double t_max,
                                                          double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("find_temperature_threshold: tol must be > 0");
  if (!(t_max > 0.0)) throw InvalidArgument("find_temperature_threshold: t_max must be > 0");
  auto e_mm = [&](double t) {
    SystemParams p = base;
    p.temperature = t;
    auto report = entanglement_report(p);
    if (!report.entanglement) {
      throw UnstableSystem("find_temperature_threshold: drift matrix not stable", report.stability);
    }
    return report.entanglement->e_mm;
  };
  if (!(e_mm(0.0) > 0.0)) {
    throw NoEntanglement("find_temperature_threshold: magnon modes are not entangled at T = 0");
  }
  if (e_mm(t_max) > 0.0) return std::nullopt;

  double lo = 0.0, hi = t_max;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (e_mm(mid) > 0.0 ? lo : hi) = mid;
  }
  return ThresholdResult{0.5 * (lo + hi), lo, hi};
}

}  // namespace magent
