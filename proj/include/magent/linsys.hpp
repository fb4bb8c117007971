#pragma once

// Steady-state Lyapunov solver and drift-matrix stability analysis.

#include "magent/cvgaussian.hpp"
#include "magent/errors.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace magent {

/// Real parts in [-kMarginalStability, 0) count as unstable when solving.
inline constexpr double kMarginalStability = 1e-12;
/// Largest acceptable condition estimate of the vectorized Lyapunov operator.
inline constexpr double kMaxConditionNumber = 1e12;
inline constexpr double kLyapunovResidualTol = 1e-9;

struct StabilityReport {
  bool stable = false;
  double max_real_part = 0.0;
  std::vector<std::complex<double>> eigenvalues;
};

class UnstableSystem : public Error {
 public:
  UnstableSystem(const std::string& what, StabilityReport report)
      : Error(what), report_(std::move(report)) {}
  const StabilityReport& report() const { return report_; }

 private:
  StabilityReport report_;
};

/// Full spectrum of the drift matrix; stable iff every real part is < 0.
StabilityReport stability(const Eigen::MatrixXd& drift);

/// Unique symmetric V with A V + V A^T + D = 0.
///
/// Solved by vectorization, (I (x) A + A (x) I) vec(V) = -vec(D). Throws
/// UnstableSystem when A is not strictly stable (marginal counts as unstable)
/// and NearSingular when the condition estimate exceeds kMaxConditionNumber.
CovarianceMatrix solve_lyapunov(const Eigen::MatrixXd& drift, const Eigen::MatrixXd& diffusion);

/// ||A V + V A^T + D||_F.
double lyapunov_residual(const Eigen::MatrixXd& drift, const Eigen::MatrixXd& diffusion,
                         const Eigen::MatrixXd& v);

/// Brute-force oracle: integrates dV/dt = A V + V A^T + D from V(0) = 0 with
/// classical RK4 up to `horizon`, which approximates the integral of
/// e^{At} D e^{A^T t} over [0, horizon]. The neglected tail is of order
/// exp(2 * max_real_part * horizon) relative to V.
///
/// Requires horizon >= 10 / |max_real_part| and step <= 0.01 / spectral_radius(A).
Eigen::MatrixXd integrate_lyapunov_oracle(const Eigen::MatrixXd& drift,
                                          const Eigen::MatrixXd& diffusion, double horizon,
                                          double step);

}  // namespace magent
