#include "magent/sweep.hpp"
#include "magent/errors.hpp"
#include "magent/paths.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace magent;
using doctest::Approx;

namespace {

SystemParams at(double r, double temperature) {
  auto p = baseline_params();
  p.r = r;
  p.temperature = temperature;
  return p;
}

std::size_t nearest(const std::vector<double>& values, double x) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (std::abs(values[k] - x) < std::abs(values[best] - x)) best = k;
  }
  return best;
}

}  // namespace

TEST_CASE("linspace") {
  const auto v = linspace(-1.0, 1.0, 61);
  CHECK(v.size() == 61);
  CHECK(v.front() == -1.0);
  CHECK(v.back() == 1.0);
  CHECK(v[30] == 0.0);
  CHECK(linspace(2.0, 3.0, 1) == std::vector<double>{2.0});
}

TEST_CASE("degenerate sweep equals a direct report") {
  SweepSpec spec;
  spec.base = at(0.4, 0.1);
  spec.axis1 = {"r", {0.4}};
  spec.outputs = {Output::e_aa, Output::e_mm, Output::e_a1m1, Output::e_a2m2, Output::n_am,
                  Output::max_real_part, Output::ratio_mm_aa};
  const auto grid = run_sweep(spec);
  REQUIRE(grid.cells.size() == 1);
  const auto direct = entanglement_report(spec.base);
  const auto& c = grid.cells[0];
  CHECK(c.stable);
  CHECK(c.values[0] == direct.entanglement->e_aa);
  CHECK(c.values[1] == direct.entanglement->e_mm);
  CHECK(c.values[2] == direct.entanglement->e_a1m1);
  CHECK(c.values[3] == direct.entanglement->e_a2m2);
  CHECK(c.values[4] == direct.entanglement->n_a1m1);
  CHECK(c.values[5] == direct.stability.max_real_part);
  CHECK(c.values[6] == direct.entanglement->e_mm / direct.entanglement->e_aa);
}

TEST_CASE("SweepSpec validation happens before evaluation") {
  SweepSpec spec;
  spec.base = baseline_params();
  spec.axis1 = {"not_a_path", {0.0, 1.0}};
  spec.outputs = {Output::e_mm};
  CHECK_THROWS_AS(run_sweep(spec), InvalidArgument);

  spec.axis1 = {"r", {0.0, 1.0, 0.5}};
  CHECK_THROWS_AS(run_sweep(spec), InvalidArgument);
  spec.axis1 = {"r", {}};
  CHECK_THROWS_AS(run_sweep(spec), InvalidArgument);
  spec.axis1 = {"r", {-1.0, 0.0}};
  CHECK_THROWS_AS(run_sweep(spec), InvalidArgument);
  spec.axis1 = {"r", {1.0, 0.0}};  // decreasing is fine
  CHECK_NOTHROW(run_sweep(spec));

  spec.engine = Engine::analytic;
  spec.axis1 = {"delta_a1", {0.0, 0.5}};
  CHECK_THROWS_AS(run_sweep(spec), InvalidArgument);
}

TEST_CASE("unstable cells are data") {
  SweepSpec spec;
  spec.base = baseline_params();
  spec.base.g = {0.0, 0.0};
  spec.axis1 = {"kappa_m/kappa_a", {1e-40, 0.2}};
  spec.outputs = {Output::e_mm, Output::max_real_part};
  const auto grid = run_sweep(spec);
  CHECK_FALSE(grid.at(0).stable);
  CHECK(std::isnan(grid.at(0).values[0]));
  CHECK(std::isnan(grid.at(0).values[1]));
  CHECK(grid.at(1).stable);
}

TEST_CASE("sequential and concurrent sweeps agree") {
  const auto spec = figure_preset("fig2a", 9);
  const auto seq = run_sweep(spec, {1});
  const auto par = run_sweep(spec, {4});
  REQUIRE(seq.cells.size() == par.cells.size());
  for (std::size_t k = 0; k < seq.cells.size(); ++k) {
    CHECK(seq.cells[k].values == par.cells[k].values);
    CHECK(seq.cells[k].axis1 == par.cells[k].axis1);
    CHECK(seq.cells[k].axis2 == par.cells[k].axis2);
  }
}

TEST_CASE("figure presets match their captions") {
  struct Fixed {
    std::map<std::string, double> params;
    std::string axis1, axis2;
    Engine engine;
  };
  const std::map<std::string, Fixed> fixture = {
      {"fig2a", {{{"delta_a2", 0}, {"delta_m2", 0}, {"r", 1}, {"T", 0.1}, {"theta", 0}}, "delta_a1", "delta_m1", Engine::numerical}},
      {"fig2b", {{{"delta_a1", 0}, {"delta_m1", 0}, {"r", 1}, {"T", 0.1}, {"theta", 0}}, "delta_a2", "delta_m2", Engine::numerical}},
      {"fig2c", {{{"delta_a1", 0}, {"delta_a2", 0}, {"delta_m1", 0}, {"delta_m2", 0}, {"theta", 0}}, "r", "T", Engine::numerical}},
      {"fig3a", {{{"g1", 5}, {"delta_a1", 0}, {"delta_a2", 0}, {"delta_m1", 0}, {"delta_m2", 0}, {"kappa_m/kappa_a", 0.2}, {"theta", 0}, {"T", 0.1}, {"freq_a1", 1e10}, {"kappa_a1", 5e6}}, "r", "g2/g1", Engine::numerical}},
      {"fig3b", {{{"delta_a1", 0}, {"delta_a2", 0}, {"delta_m1", 0}, {"delta_m2", 0}, {"kappa_m/kappa_a", 0.2}, {"theta", 0}, {"T", 0.1}, {"freq_a1", 1e10}, {"kappa_a1", 5e6}}, "r", "g", Engine::numerical}},
      {"fig4", {{{"delta_a1", 0}, {"delta_a2", 0}, {"theta", 0}, {"g1", 0}, {"g2", 0}}, "r", "", Engine::analytic}},
      {"fig5a", {{{"delta_a1", 0}, {"delta_a2", 0}, {"delta_m1", 0}, {"delta_m2", 0}, {"theta", 0}, {"r", 1}}, "kappa_m/kappa_a", "g/kappa_a", Engine::analytic}},
      {"fig5b", {{{"delta_a1", 0}, {"delta_a2", 0}, {"delta_m1", 0}, {"delta_m2", 0}, {"theta", 0}, {"r", 1}}, "kappa_m/kappa_a", "g/kappa_a", Engine::analytic}},
      {"fig6", {{{"delta_a1", 0}, {"delta_a2", 0}, {"delta_m1", 0}, {"delta_m2", 0}, {"theta", 0}, {"r", 1}}, "kappa_m/kappa_a", "g/kappa_a", Engine::analytic}},
  };
  REQUIRE(fixture.size() == preset_names().size());
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const auto spec = figure_preset(name);
    const auto& f = fixture.at(name);
    for (const auto& [path, value] : f.params) {
      CAPTURE(path);
      CHECK(get_parameter(spec.base, path) == Approx(value).epsilon(1e-12));
    }
    CHECK(spec.axis1.path == f.axis1);
    CHECK((spec.axis2 ? spec.axis2->path : std::string()) == f.axis2);
    CHECK(spec.engine == f.engine);
    CHECK_NOTHROW(validate(spec));
  }
  const auto b = figure_preset("fig3b");
  CHECK(b.axis2->values == std::vector<double>{0.5, 1.0, 2.0});
  CHECK(b.outputs.front() == Output::ratio_mm_aa);
  CHECK(figure_preset("fig2a").axis1.values.size() == kDefaultResolution2D);
  CHECK(figure_preset("fig4").axis1.values.size() == kDefaultResolution1D);
  CHECK(figure_preset("fig2c", 11).axis2->values.size() == 11);

  try {
    figure_preset("fig7");
    FAIL("expected InvalidArgument");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("fig5b") != std::string::npos);
  }
}

TEST_CASE("fig2c corner, fig3a band, fig4 line") {
  const auto c = run_sweep(figure_preset("fig2c", 21), {4});
  const auto col = c.column(Output::e_mm);
  double best = -1;
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (c.at(i, j).values[col] > best) {
        best = c.at(i, j).values[col];
        bi = i;
        bj = j;
      }
  CHECK(bi == c.rows() - 1);
  CHECK(bj == 0);
  // (r = 0.4, T = 0.1 K) lies on the 21-point grid.
  const auto& cell = c.at(nearest(c.spec.axis1.values, 0.4), nearest(c.spec.axis2->values, 0.1));
  CHECK(cell.axis1 == Approx(0.4));
  CHECK(cell.axis2 == Approx(0.1));
  CHECK(cell.values[col] == Approx(0.6).epsilon(0.05 / 0.6));

  const auto a = run_sweep(figure_preset("fig3a", 41), {4});
  auto band = [&](std::size_t i) {
    double lo = 1e9, hi = -1e9;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).values[0] > 0) {
        lo = std::min(lo, a.at(i, j).axis2);
        hi = std::max(hi, a.at(i, j).axis2);
      }
    }
    return std::pair{lo, hi};
  };
  const auto small = band(nearest(a.spec.axis1.values, 0.25));
  const auto large = band(nearest(a.spec.axis1.values, 1.5));
  CHECK(small.first <= 1.0);
  CHECK(small.second >= 1.0);
  CHECK(large.first <= 1.0);
  CHECK(large.second >= 1.0);
  CHECK(small.second - small.first > large.second - large.first);

  const auto f4 = run_sweep(figure_preset("fig4"));
  const auto& r1 = f4.at(nearest(f4.spec.axis1.values, 1.0));
  CHECK(r1.axis1 == Approx(1.0));
  CHECK(r1.values[0] == Approx(2.0).epsilon(1e-12));
}

TEST_CASE("analytic presets") {
  const auto f5a = run_sweep(figure_preset("fig5a", 11));
  const auto f5b = run_sweep(figure_preset("fig5b", 11));
  const auto f6 = run_sweep(figure_preset("fig6", 11));
  // Smallest magnon decay: coupling moves entanglement from the cavities to the magnons.
  CHECK(f5b.at(0, 10).values[0] > f5b.at(0, 1).values[0]);
  CHECK(f5a.at(0, 10).values[0] - f5b.at(0, 10).values[0] <
        f5a.at(0, 1).values[0] - f5b.at(0, 1).values[0]);
  // Zero coupling: cavities keep the full 2r.
  CHECK(f5a.at(5, 0).values[0] == Approx(2.0).epsilon(1e-10));
  for (const auto& cell : f6.cells) {
    CHECK(cell.values[0] <= 1e-9);
    CHECK(cell.values[1] == 0.0);
    CHECK(cell.values[2] == 0.0);
  }
}

TEST_CASE("find_temperature_threshold") {
  const auto t = find_temperature_threshold(at(0.4, 0.0), 2.0, 1e-3);
  REQUIRE(t);
  CHECK(t->temperature >= 0.6);
  CHECK(t->temperature <= 1.0);
  CHECK(t->upper - t->lower <= 1e-3);

  auto entangled = at(0.4, 0.0);
  entangled.temperature = t->lower;
  CHECK(entanglement_report(entangled).entanglement->e_mm > 0.0);
  entangled.temperature = t->upper;
  CHECK(entanglement_report(entangled).entanglement->e_mm == 0.0);

  const auto fine = find_temperature_threshold(at(0.4, 0.0), 2.0, 5e-4);
  REQUIRE(fine);
  CHECK((fine->upper - fine->lower) == Approx(0.5 * (t->upper - t->lower)));

  CHECK_FALSE(find_temperature_threshold(at(1.5, 0.0), 0.2, 1e-3));
  CHECK_THROWS_AS(find_temperature_threshold(at(0.0, 0.0), 2.0, 1e-3), NoEntanglement);
  CHECK_THROWS_AS(find_temperature_threshold(at(0.4, 0.0), 2.0, 0.0), InvalidArgument);
}
