#pragma once

// Continuous-variable Gaussian-state algebra.
//
// Quadratures are ordered (x_1, p_1, x_2, p_2, ...) and the vacuum has
// variance 1/2. None of the routines here know anything about cavities or
// magnons; modes are opaque labelled slots.

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace magent {

inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kPhysicalitySlack = 1e-9;
/// Negativity refuses states whose symplectic spectrum dips below 1/2 by more than this.
inline constexpr double kInvalidStateSlack = 1e-6;
/// Maximum relative disagreement between the eigen-solve and the two-mode invariants.
inline constexpr double kSpectrumCrossCheckTol = 1e-9;
/// 2 nu~_- within this of 1 counts as separable; absorbs eigen-solve round-off.
inline constexpr double kSeparabilitySlack = 1e-12;

class CovarianceMatrix {
 public:
  /// Throws InvalidArgument if `entries` is not square, of even dimension,
  /// symmetric to kSymmetryTol, or if the label count does not match.
  explicit CovarianceMatrix(Eigen::MatrixXd entries,
                            std::vector<std::string> mode_labels = {});

  static CovarianceMatrix vacuum(std::size_t n_modes);

  std::size_t n_modes() const { return static_cast<std::size_t>(entries_.rows()) / 2; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  const std::vector<std::string>& mode_labels() const { return labels_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  /// 2x2 block for the pair of modes (i, j).
  Eigen::Matrix2d block(std::size_t i, std::size_t j) const;

 private:
  Eigen::MatrixXd entries_;
  std::vector<std::string> labels_;
};

/// Real block-diagonal representation of the direct sum of i*sigma_y.
Eigen::MatrixXd symplectic_form(std::size_t n_modes);

/// Sub-covariance matrix of the listed modes, in the listed order.
CovarianceMatrix reduce(const CovarianceMatrix& cm, std::span<const std::size_t> modes);
CovarianceMatrix reduce(const CovarianceMatrix& cm, std::initializer_list<std::size_t> modes);

/// P V P with P flipping the momentum of `transposed_mode` (0 or 1).
CovarianceMatrix partial_transpose(const CovarianceMatrix& cm, std::size_t transposed_mode = 0);

/// Symplectic eigenvalues in ascending order, one per mode.
///
/// Computed from a complex eigen-solve of i*Omega*V. For two-mode matrices the
/// result is cross-checked against the invariants Delta and det V and a mismatch above
/// kSpectrumCrossCheckTol raises NumericalFailure.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cm);

/// Closed-form symplectic spectrum {nu_-, nu_+} of a two-mode CM
/// [[A, C], [C^T, B]]: nu_+-^2 = (Delta +- sqrt(Delta^2 - 4 det V)) / 2 with
/// Delta = det A + det B + 2 det C.
std::array<double, 2> two_mode_symplectic_eigenvalues(const CovarianceMatrix& cm);

/// -ln(2 nu~_-) without clamping; positive means entangled.
double negativity_exponent(const CovarianceMatrix& cm);

/// Logarithmic negativity max{0, -ln 2 nu~_-} of a two-mode state (natural log).
/// Returns exactly 0.0 when 2 nu~_- >= 1 - kSeparabilitySlack.
double log_negativity(const CovarianceMatrix& cm);

/// Two-mode squeezed vacuum with squeezing r and phase theta.
CovarianceMatrix tmsv_cm(double r, double theta = 0.0);

/// True when every symplectic eigenvalue is >= 1/2 - slack.
bool is_physical(const CovarianceMatrix& cm, double slack = kPhysicalitySlack);

}  // namespace magent
