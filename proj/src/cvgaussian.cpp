#include "magent/cvgaussian.hpp"

#include "magent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace magent {

namespace {

void require_two_modes(const CovarianceMatrix& cm, const char* what) {
  if (cm.n_modes() != 2) {
    throw InvalidArgument(std::string(what) + ": expected a two-mode covariance matrix, got " +
                          std::to_string(cm.n_modes()) + " modes");
  }
}

std::vector<double> eigen_route(const CovarianceMatrix& cm) {
  const auto n = cm.n_modes();
  const Eigen::MatrixXcd m =
      std::complex<double>(0.0, 1.0) * (symplectic_form(n) * cm.entries()).cast<std::complex<double>>();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("symplectic_eigenvalues: eigen-solve did not converge");
  }
  std::vector<double> moduli;
  moduli.reserve(2 * n);
  for (const auto& lambda : solver.eigenvalues()) {
    if (std::abs(lambda.imag()) > 1e-8 * std::max(1.0, std::abs(lambda))) {
      throw NumericalFailure("symplectic_eigenvalues: complex residue " +
                             std::to_string(lambda.imag()) + " in spectrum of i*Omega*V");
    }
    moduli.push_back(std::abs(lambda));
  }
  std::sort(moduli.begin(), moduli.end());
  // Eigenvalues come in +-nu pairs; average each pair.
  std::vector<double> nu(n);
  for (std::size_t k = 0; k < n; ++k) nu[k] = 0.5 * (moduli[2 * k] + moduli[2 * k + 1]);
  return nu;
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd entries, std::vector<std::string> mode_labels)
    : entries_(std::move(entries)), labels_(std::move(mode_labels)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols() || entries_.rows() % 2 != 0) {
    throw InvalidArgument("CovarianceMatrix: entries must be a non-empty 2n x 2n matrix, got " +
                          std::to_string(entries_.rows()) + "x" + std::to_string(entries_.cols()));
  }
  if (!entries_.allFinite()) throw InvalidArgument("CovarianceMatrix: non-finite entry");
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < entries_.cols(); ++j) {
      const double scale = std::max(1.0, std::abs(entries_(i, j)));
      if (std::abs(entries_(i, j) - entries_(j, i)) > kSymmetryTol * scale) {
        throw InvalidArgument("CovarianceMatrix: entries not symmetric at (" + std::to_string(i) +
                              ", " + std::to_string(j) + ")");
      }
    }
  }
  if (labels_.empty()) {
    for (std::size_t k = 0; k < n_modes(); ++k) labels_.push_back("mode-" + std::to_string(k));
  } else if (labels_.size() != n_modes()) {
    throw InvalidArgument("CovarianceMatrix: " + std::to_string(labels_.size()) +
                          " labels for " + std::to_string(n_modes()) + " modes");
  }
}

CovarianceMatrix CovarianceMatrix::vacuum(std::size_t n_modes) {
  if (n_modes == 0) throw InvalidArgument("vacuum: n_modes must be positive");
  const auto d = static_cast<Eigen::Index>(2 * n_modes);
  return CovarianceMatrix(0.5 * Eigen::MatrixXd::Identity(d, d));
}

Eigen::Matrix2d CovarianceMatrix::block(std::size_t i, std::size_t j) const {
  return entries_.block<2, 2>(static_cast<Eigen::Index>(2 * i), static_cast<Eigen::Index>(2 * j));
}

Eigen::MatrixXd symplectic_form(std::size_t n_modes) {
  if (n_modes == 0) throw InvalidArgument("symplectic_form: n_modes must be positive");
  const auto d = static_cast<Eigen::Index>(2 * n_modes);
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index k = 0; k < d; k += 2) {
    omega(k, k + 1) = 1.0;
    omega(k + 1, k) = -1.0;
  }
  return omega;
}

CovarianceMatrix reduce(const CovarianceMatrix& cm, std::span<const std::size_t> modes) {
  if (modes.empty()) throw InvalidArgument("reduce: empty mode list");
  std::vector<bool> seen(cm.n_modes(), false);
  for (auto m : modes) {
    if (m >= cm.n_modes()) {
      throw InvalidArgument("reduce: mode index " + std::to_string(m) + " out of range for " +
                            std::to_string(cm.n_modes()) + " modes");
    }
    if (seen[m]) throw InvalidArgument("reduce: duplicate mode index " + std::to_string(m));
    seen[m] = true;
  }
  const auto k = static_cast<Eigen::Index>(modes.size());
  Eigen::MatrixXd sub(2 * k, 2 * k);
  std::vector<std::string> labels;
  for (Eigen::Index a = 0; a < k; ++a) {
    labels.push_back(cm.mode_labels()[modes[a]]);
    for (Eigen::Index b = 0; b < k; ++b) sub.block<2, 2>(2 * a, 2 * b) = cm.block(modes[a], modes[b]);
  }
  return CovarianceMatrix(std::move(sub), std::move(labels));
}

CovarianceMatrix reduce(const CovarianceMatrix& cm, std::initializer_list<std::size_t> modes) {
  return reduce(cm, std::span<const std::size_t>(modes.begin(), modes.size()));
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& cm, std::size_t transposed_mode) {
  require_two_modes(cm, "partial_transpose");
  if (transposed_mode > 1) throw InvalidArgument("partial_transpose: mode must be 0 or 1");
  const Eigen::Index flip = static_cast<Eigen::Index>(2 * transposed_mode + 1);
  Eigen::MatrixXd v = cm.entries();
  v.row(flip) *= -1.0;
  v.col(flip) *= -1.0;
  return CovarianceMatrix(std::move(v), cm.mode_labels());
}

std::array<double, 2> two_mode_symplectic_eigenvalues(const CovarianceMatrix& cm) {
  require_two_modes(cm, "two_mode_symplectic_eigenvalues");
  const double det_a = cm.block(0, 0).determinant();
  const double det_b = cm.block(1, 1).determinant();
  const double det_c = cm.block(0, 1).determinant();
  const double det_v = cm.entries().determinant();
  const double delta = det_a + det_b + 2.0 * det_c;
  const double disc = std::max(0.0, delta * delta - 4.0 * det_v);
  const double nu_plus_sq = 0.5 * (delta + std::sqrt(disc));
  // nu_-^2 nu_+^2 = det V; avoids cancellation when nu_- << nu_+.
  const double nu_minus_sq = nu_plus_sq > 0.0 ? det_v / nu_plus_sq : 0.0;
  return {std::sqrt(std::max(0.0, nu_minus_sq)), std::sqrt(nu_plus_sq)};
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cm) {
  auto nu = eigen_route(cm);
  if (cm.n_modes() == 2) {
    // Compare the invariants nu-^2 + nu+^2 = Delta and nu-^2 nu+^2 = det V rather than the
    // roots themselves: the roots lose half their digits when nu- ~ nu+.
    const double det_v = cm.entries().determinant();
    const double delta = cm.block(0, 0).determinant() + cm.block(1, 1).determinant() +
                         2.0 * cm.block(0, 1).determinant();
    const double sum = nu[0] * nu[0] + nu[1] * nu[1];
    const double prod = nu[0] * nu[0] * nu[1] * nu[1];
    const double scale = std::max(1.0, sum);
    if (std::abs(sum - delta) > kSpectrumCrossCheckTol * scale ||
        std::abs(prod - det_v) > kSpectrumCrossCheckTol * scale * scale) {
      throw NumericalFailure("symplectic_eigenvalues: eigen-solve disagrees with the two-mode "
                             "invariants (Delta " + std::to_string(delta) + " vs " +
                             std::to_string(sum) + ", det " + std::to_string(det_v) + " vs " +
                             std::to_string(prod) + ")");
    }
  }
  return nu;
}

bool is_physical(const CovarianceMatrix& cm, double slack) {
  const auto nu = symplectic_eigenvalues(cm);
  return nu.front() >= 0.5 - slack;
}

namespace {

double min_pt_eigenvalue(const CovarianceMatrix& cm) {
  require_two_modes(cm, "log_negativity");
  const double nu_min = symplectic_eigenvalues(cm).front();
  if (nu_min < 0.5 - kInvalidStateSlack) {
    throw InvalidState("log_negativity: unphysical state, minimum symplectic eigenvalue " +
                       std::to_string(nu_min));
  }
  return symplectic_eigenvalues(partial_transpose(cm, 0)).front();
}

}  // namespace

double negativity_exponent(const CovarianceMatrix& cm) {
  return -std::log(2.0 * min_pt_eigenvalue(cm));
}

double log_negativity(const CovarianceMatrix& cm) {
  const double nu = min_pt_eigenvalue(cm);
  if (2.0 * nu >= 1.0 - kSeparabilitySlack) return 0.0;
  return -std::log(2.0 * nu);
}

CovarianceMatrix tmsv_cm(double r, double theta) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw InvalidArgument("tmsv_cm: squeezing r must be >= 0");
  const double c = 0.5 * std::cosh(2.0 * r);
  const double s = 0.5 * std::sinh(2.0 * r);
  Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
  v(0, 0) = v(1, 1) = v(2, 2) = v(3, 3) = c;
  Eigen::Matrix2d corr;
  corr << std::cos(theta), std::sin(theta), std::sin(theta), -std::cos(theta);
  v.block<2, 2>(0, 2) = s * corr;
  v.block<2, 2>(2, 0) = s * corr.transpose();
  return CovarianceMatrix(v);
}

}  // namespace magent
