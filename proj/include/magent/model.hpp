#pragma once

// Two cavities, each hosting one magnon mode, driven by a two-mode squeezed
// microwave field. Translates physical parameters into the drift and
// diffusion matrices of the linearized fluctuation dynamics and evaluates the
// stationary entanglement between every relevant pair of modes.
//
// Quadrature ordering: (X1, Y1, X2, Y2, x1, y1, x2, y2), i.e. modes
// cavity-1, cavity-2, magnon-1, magnon-2. All rates are divided by kappa_a1
// before the matrices are built, so A and D are dimensionless.

#include "magent/cvgaussian.hpp"
#include "magent/linsys.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <numbers>
#include <optional>

namespace magent {

inline constexpr double kHbar = 1.054571817e-34;      // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J / K
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum Mode : std::size_t { kCavity1 = 0, kCavity2 = 1, kMagnon1 = 2, kMagnon2 = 3 };

/// Frequencies and rates in rad/s, temperature in kelvin.
struct SystemParams {
  std::array<double, 2> omega_a{};      // cavity resonances
  std::array<double, 2> omega_m{};      // magnon frequencies
  std::array<double, 2> omega_drive{};  // input-field frequencies (rotating frames)
  std::array<double, 2> kappa_a{};
  std::array<double, 2> kappa_m{};
  std::array<double, 2> g{};
  double r = 0.0;
  double theta = 0.0;
  double temperature = 0.0;

  double delta_a(std::size_t j) const { return omega_a[j] - omega_drive[j]; }
  double delta_m(std::size_t j) const { return omega_m[j] - omega_drive[j]; }

  /// Swaps the roles of subsystems 1 and 2.
  SystemParams swapped() const;

  bool operator==(const SystemParams&) const = default;
};

/// Throws InvalidArgument unless decays > 0, r >= 0, T >= 0, frequencies > 0
/// and every field is finite.
void validate(const SystemParams& params);

/// omega_a1/2pi = 10 GHz, kappa_a/2pi = 5 MHz, kappa_m = kappa_a/5,
/// g1 = g2 = 5 kappa_a, theta = 0, every mode resonant with its drive,
/// r = 0 and T = 0 (figures set those explicitly).
SystemParams baseline_params();

struct NoiseMoments {
  double n = 0.0;               // sinh^2 r
  std::complex<double> m{};     // e^{i theta} sinh r cosh r
  std::array<double, 2> n_m{};  // thermal magnon occupations
};

/// Planck occupation 1/(exp(hbar omega / k_B T) - 1); exactly 0 at T = 0.
double thermal_occupation(double omega, double temperature);

NoiseMoments noise_moments(const SystemParams& params);

Eigen::MatrixXd build_drift(const SystemParams& params);
Eigen::MatrixXd build_diffusion(const SystemParams& params);

/// Stationary 4-mode covariance matrix. Propagates UnstableSystem.
CovarianceMatrix steady_state_cm(const SystemParams& params);

struct PairEntanglement {
  double e_aa = 0.0;    // cavity-1 / cavity-2
  double e_mm = 0.0;    // magnon-1 / magnon-2
  double e_a1m1 = 0.0;  // cavity-1 / magnon-1
  double e_a2m2 = 0.0;  // cavity-2 / magnon-2
  /// Unclamped -ln(2 nu~_-) of the cavity-1 / magnon-1 pair.
  double n_a1m1 = 0.0;
};

struct EntanglementReport {
  StabilityReport stability;
  /// Present only when the drift matrix is stable.
  std::optional<PairEntanglement> entanglement;
  std::optional<CovarianceMatrix> cm;
};

EntanglementReport entanglement_report(const SystemParams& params);

}  // namespace magent
