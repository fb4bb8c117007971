// Command-line front end: single-point reports, figure sweeps, survival
// temperature search.
//
// Exit codes: 0 success, 2 invalid arguments, 3 unstable system at a point
// query, 4 I/O error.

#include "magent/config.hpp"
#include "magent/emit.hpp"
#include "magent/errors.hpp"
#include "magent/paths.hpp"
#include "magent/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace magent;

constexpr int kExitInvalid = 2;
constexpr int kExitUnstable = 3;
constexpr int kExitIo = 4;

struct Common {
  std::string config_path;
  std::vector<std::string> params;
  Config config;

  SystemParams effective_params() const {
    SystemParams p = baseline_params();
    config.apply_params(p);
    for (const auto& a : params) apply_assignment(p, a);
    return p;
  }

  template <typename T>
  T setting(std::string_view section, std::string_view key, T fallback) const {
    auto raw = config.get(section, key);
    if (!raw) return fallback;
    return static_cast<T>(parse_double(*raw, std::string(section) + "." + std::string(key)));
  }
};

void print_kv(std::ostream& out, std::string_view key, const std::string& value) {
  std::string padded(key);
  padded.resize(std::max<std::size_t>(16, key.size() + 1), ' ');
  out << padded << value << '\n';
}

int run_point(const Common& common, bool csv) {
  const auto p = common.effective_params();
  validate(p);
  const auto report = entanglement_report(p);
  const bool ok = report.entanglement.has_value();
  const auto value = [&](double PairEntanglement::*field) {
    return ok ? format_value((*report.entanglement).*field) : std::string("NaN");
  };

  if (csv) {
    std::cout << "# " << kVersion << '\n';
    for (const auto& [name, v] : describe(p)) {
      std::cout << "# param." << name << " = " << format_value(v) << '\n';
    }
    std::cout << "stable,max_real_part,E_aa,E_mm,E_a1m1,E_a2m2,N_am\n"
              << (ok ? "true" : "false") << ',' << format_value(report.stability.max_real_part)
              << ',' << value(&PairEntanglement::e_aa) << ',' << value(&PairEntanglement::e_mm)
              << ',' << value(&PairEntanglement::e_a1m1) << ',' << value(&PairEntanglement::e_a2m2)
              << ',' << value(&PairEntanglement::n_a1m1) << '\n';
  } else {
    for (const auto& [name, v] : describe(p)) print_kv(std::cout, name, format_value(v));
    print_kv(std::cout, "stable", ok ? "true" : "false");
    print_kv(std::cout, "max_real_part", format_value(report.stability.max_real_part));
    print_kv(std::cout, "E_aa", value(&PairEntanglement::e_aa));
    print_kv(std::cout, "E_mm", value(&PairEntanglement::e_mm));
    print_kv(std::cout, "E_a1m1", value(&PairEntanglement::e_a1m1));
    print_kv(std::cout, "E_a2m2", value(&PairEntanglement::e_a2m2));
    print_kv(std::cout, "N_am", value(&PairEntanglement::n_a1m1));
  }
  if (!ok) {
    std::cerr << "error: system is not stable (max real part of drift "
              << format_value(report.stability.max_real_part) << " kappa_a1)\n";
    return kExitUnstable;
  }
  return 0;
}

struct SweepArgs {
  std::string preset;
  std::string out;
  std::string heatmap;
  std::string lineplot;
  std::string column;
  std::size_t resolution = 0;
  unsigned threads = 0;
};

int run_sweep_cmd(const Common& common, const SweepArgs& args) {
  std::optional<std::size_t> resolution;
  if (args.resolution > 0) {
    resolution = args.resolution;
  } else if (auto r = common.setting<std::size_t>("sweep", "resolution", 0); r > 0) {
    resolution = r;
  }
  const unsigned threads =
      args.threads > 0 ? args.threads : common.setting<unsigned>("sweep", "threads", 1);

  const auto spec = figure_preset(args.preset, resolution, common.effective_params());
  const Output column = args.column.empty() ? spec.outputs.front() : parse_output(args.column);
  if (!args.heatmap.empty() && !spec.axis2) {
    throw InvalidArgument("preset '" + spec.name + "' is one-dimensional; use --lineplot");
  }
  const auto grid = run_sweep(spec, {threads});
  if (args.out.empty()) {
    emit_csv(grid, std::cout);
  } else {
    emit_csv(grid, std::filesystem::path(args.out));
  }
  if (!args.heatmap.empty()) emit_heatmap(grid, column, std::filesystem::path(args.heatmap));
  if (!args.lineplot.empty()) emit_lineplot(grid, column, std::filesystem::path(args.lineplot));
  return 0;
}

int run_threshold(const Common& common, double r, std::optional<double> tmax_flag,
                  std::optional<double> tol_flag) {
  auto p = common.effective_params();
  p.r = r;
  validate(p);
  const double tmax = tmax_flag.value_or(common.setting<double>("threshold", "tmax", 2.0));
  const double tol = tol_flag.value_or(common.setting<double>("threshold", "tol", 1e-3));
  const auto result = find_temperature_threshold(p, tmax, tol);
  if (!result) {
    std::cout << "E_mm > 0 up to T_max = " << format_value(tmax) << " K\n";
    return 0;
  }
  print_kv(std::cout, "r", format_value(r));
  print_kv(std::cout, "threshold_K", format_value(result->temperature));
  print_kv(std::cout, "bracket_K", "[" + format_value(result->lower) + ", " +
                                       format_value(result->upper) + "]");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state magnon entanglement under two-mode squeezed driving"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--config", common.config_path, "flat section.key = value file");

  auto* point = app.add_subcommand("point", "report entanglement at one parameter point");
  bool csv = false;
  point->add_option("--param", common.params, "parameter override path=value (repeatable)");
  point->add_flag("--csv", csv, "print a single CSV row instead of aligned text");

  auto* sweep = app.add_subcommand("sweep", "run a figure preset");
  SweepArgs sweep_args;
  sweep->add_option("--preset", sweep_args.preset, "preset name (see list-presets)")->required();
  sweep->add_option("--out", sweep_args.out, "CSV destination (default stdout)");
  sweep->add_option("--heatmap", sweep_args.heatmap, "SVG density plot destination");
  sweep->add_option("--lineplot", sweep_args.lineplot, "SVG line plot destination");
  sweep->add_option("--column", sweep_args.column, "output column to plot");
  sweep->add_option("--resolution", sweep_args.resolution, "points per continuous axis")
      ->check(CLI::Range(2, 10000));
  sweep->add_option("--threads", sweep_args.threads, "worker threads")->check(CLI::Range(1, 1024));
  sweep->add_option("--param", common.params, "baseline override path=value (repeatable)");

  auto* threshold = app.add_subcommand("threshold", "temperature at which E_mm vanishes");
  double r = 0.0;
  std::optional<double> tmax, tol;
  threshold->add_option("--r", r, "squeezing parameter")->required();
  threshold->add_option("--tmax", tmax, "upper end of the search in K (default 2.0)");
  threshold->add_option("--tol", tol, "bracket width in K (default 1e-3)");
  threshold->add_option("--param", common.params, "baseline override path=value (repeatable)");

  auto* list = app.add_subcommand("list-presets", "list figure presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (!common.config_path.empty()) common.config = Config::load(common.config_path);
    if (*point) return run_point(common, csv);
    if (*sweep) return run_sweep_cmd(common, sweep_args);
    if (*threshold) return run_threshold(common, r, tmax, tol);
    if (*list) {
      for (const auto& name : preset_names()) {
        const auto spec = figure_preset(name);
        std::cout << name << "  " << spec.axis1.path;
        if (spec.axis2) std::cout << " x " << spec.axis2->path;
        std::cout << "  ->";
        for (auto o : spec.outputs) std::cout << ' ' << to_string(o);
        std::cout << "  (" << (spec.engine == Engine::numerical ? "numerical" : "analytic") << ")\n";
      }
      return 0;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UnstableSystem& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnstable;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NoEntanglement& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
