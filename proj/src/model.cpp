#include "magent/model.hpp"

#include "magent/errors.hpp"

#include <cmath>
#include <string>

namespace magent {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidArgument("SystemParams: " + msg);
}

}  // namespace

SystemParams SystemParams::swapped() const {
  auto swap = [](std::array<double, 2> v) { return std::array<double, 2>{v[1], v[0]}; };
  SystemParams s = *this;
  s.omega_a = swap(omega_a);
  s.omega_m = swap(omega_m);
  s.omega_drive = swap(omega_drive);
  s.kappa_a = swap(kappa_a);
  s.kappa_m = swap(kappa_m);
  s.g = swap(g);
  return s;
}

void validate(const SystemParams& p) {
  for (std::size_t j = 0; j < 2; ++j) {
    const auto idx = std::to_string(j + 1);
    require(std::isfinite(p.omega_a[j]) && p.omega_a[j] > 0, "omega_a" + idx + " must be > 0");
    require(std::isfinite(p.omega_m[j]) && p.omega_m[j] > 0, "omega_m" + idx + " must be > 0");
    require(std::isfinite(p.omega_drive[j]) && p.omega_drive[j] > 0,
            "omega_drive" + idx + " must be > 0");
    require(std::isfinite(p.kappa_a[j]) && p.kappa_a[j] > 0, "kappa_a" + idx + " must be > 0");
    require(std::isfinite(p.kappa_m[j]) && p.kappa_m[j] > 0, "kappa_m" + idx + " must be > 0");
    require(std::isfinite(p.g[j]), "g" + idx + " must be finite");
  }
  require(std::isfinite(p.r) && p.r >= 0, "r must be >= 0");
  require(std::isfinite(p.theta), "theta must be finite");
  require(std::isfinite(p.temperature) && p.temperature >= 0, "temperature must be >= 0");
}

SystemParams baseline_params() {
  const double omega = kTwoPi * 10e9;
  const double kappa_a = kTwoPi * 5e6;
  SystemParams p;
  p.omega_a = {omega, omega};
  p.omega_m = {omega, omega};
  p.omega_drive = {omega, omega};
  p.kappa_a = {kappa_a, kappa_a};
  p.kappa_m = {kappa_a / 5.0, kappa_a / 5.0};
  p.g = {5.0 * kappa_a, 5.0 * kappa_a};
  return p;
}

double thermal_occupation(double omega, double temperature) {
  if (!(omega > 0.0)) throw InvalidArgument("thermal_occupation: omega must be > 0");
  if (!(temperature >= 0.0)) throw InvalidArgument("thermal_occupation: temperature must be >= 0");
  if (temperature == 0.0) return 0.0;
  return 1.0 / std::expm1(kHbar * omega / (kBoltzmann * temperature));
}

NoiseMoments noise_moments(const SystemParams& p) {
  validate(p);
  NoiseMoments nm;
  const double sh = std::sinh(p.r);
  nm.n = sh * sh;
  nm.m = std::polar(sh * std::cosh(p.r), p.theta);
  for (std::size_t j = 0; j < 2; ++j) nm.n_m[j] = thermal_occupation(p.omega_m[j], p.temperature);
  return nm;
}

Eigen::MatrixXd build_drift(const SystemParams& p) {
  validate(p);
  const double unit = p.kappa_a[0];
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(8, 8);
  for (Eigen::Index j = 0; j < 2; ++j) {
    const auto js = static_cast<std::size_t>(j);
    const double ka = p.kappa_a[js] / unit;
    const double km = p.kappa_m[js] / unit;
    const double da = p.delta_a(js) / unit;
    const double dm = p.delta_m(js) / unit;
    const double g = p.g[js] / unit;
    const Eigen::Index cx = 2 * j, cy = cx + 1;  // cavity X, Y
    const Eigen::Index mx = 4 + 2 * j, my = mx + 1;  // magnon x, y

    a(cx, cx) = -ka;
    a(cx, cy) = da;
    a(cx, my) = g;
    a(cy, cx) = -da;
    a(cy, cy) = -ka;
    a(cy, mx) = -g;

    a(mx, cy) = g;
    a(mx, mx) = -km;
    a(mx, my) = dm;
    a(my, cx) = -g;
    a(my, mx) = -dm;
    a(my, my) = -km;
  }
  return a;
}

Eigen::MatrixXd build_diffusion(const SystemParams& p) {
  const auto nm = noise_moments(p);
  const double unit = p.kappa_a[0];
  const double ka1 = p.kappa_a[0] / unit;
  const double ka2 = p.kappa_a[1] / unit;
  const double cross = std::sqrt(ka1 * ka2);
  // M + M* and i(M* - M), both real.
  const double re = 2.0 * nm.m.real();
  const double im = 2.0 * nm.m.imag();

  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(8, 8);
  d(0, 0) = d(1, 1) = ka1 * (2.0 * nm.n + 1.0);
  d(2, 2) = d(3, 3) = ka2 * (2.0 * nm.n + 1.0);
  d(0, 2) = d(2, 0) = cross * re;
  d(0, 3) = d(3, 0) = cross * im;
  d(1, 2) = d(2, 1) = cross * im;
  d(1, 3) = d(3, 1) = -cross * re;
  for (Eigen::Index j = 0; j < 2; ++j) {
    const auto js = static_cast<std::size_t>(j);
    const double km = p.kappa_m[js] / unit;
    d(4 + 2 * j, 4 + 2 * j) = d(5 + 2 * j, 5 + 2 * j) = km * (2.0 * nm.n_m[js] + 1.0);
  }
  return d;
}

CovarianceMatrix steady_state_cm(const SystemParams& p) {
  auto v = solve_lyapunov(build_drift(p), build_diffusion(p));
  return CovarianceMatrix(v.entries(), {"cavity-1", "cavity-2", "magnon-1", "magnon-2"});
}

EntanglementReport entanglement_report(const SystemParams& p) {
  EntanglementReport report;
  report.stability = stability(build_drift(p));
  if (!report.stability.stable) return report;

  // Marginally stable drift (real part within kMarginalStability of zero)
  // has no finite steady state; the report then carries stability only.
  std::optional<CovarianceMatrix> solved;
  try {
    solved = steady_state_cm(p);
  } catch (const UnstableSystem&) {
    return report;
  } catch (const NearSingular&) {
    return report;
  }
  const CovarianceMatrix& v = *solved;
  const auto aa = reduce(v, {kCavity1, kCavity2});
  const auto mm = reduce(v, {kMagnon1, kMagnon2});
  const auto a1m1 = reduce(v, {kCavity1, kMagnon1});
  const auto a2m2 = reduce(v, {kCavity2, kMagnon2});
  PairEntanglement e;
  e.e_aa = log_negativity(aa);
  e.e_mm = log_negativity(mm);
  e.e_a1m1 = log_negativity(a1m1);
  e.e_a2m2 = log_negativity(a2m2);
  e.n_a1m1 = negativity_exponent(a1m1);
  report.entanglement = e;
  report.cm = std::move(solved);
  return report;
}

}  // namespace magent
