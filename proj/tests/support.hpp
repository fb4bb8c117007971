#pragma once

// Random generators and independent reference formulas shared by the tests.

#include "magent/cvgaussian.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>

namespace magent::testing {

inline Eigen::Matrix2d rotation(double phi) {
  Eigen::Matrix2d r;
  r << std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi);
  return r;
}

inline Eigen::Matrix4d local(const Eigen::Matrix2d& s1, const Eigen::Matrix2d& s2) {
  Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
  s.block<2, 2>(0, 0) = s1;
  s.block<2, 2>(2, 2) = s2;
  return s;
}

inline Eigen::Matrix4d beam_splitter(double t) {
  Eigen::Matrix4d s;
  const double c = std::cos(t), sn = std::sin(t);
  s << c, 0, sn, 0,
       0, c, 0, sn,
       -sn, 0, c, 0,
       0, -sn, 0, c;
  return s;
}

inline Eigen::Matrix4d two_mode_squeezer(double r) {
  Eigen::Matrix4d s;
  const double c = std::cosh(r), sh = std::sinh(r);
  s << c, 0, sh, 0,
       0, c, 0, -sh,
       sh, 0, c, 0,
       0, -sh, 0, c;
  return s;
}

inline Eigen::Matrix2d single_squeezer(double s) {
  return Eigen::Vector2d(std::exp(-s), std::exp(s)).asDiagonal();
}

/// Random symplectic 4x4 built from passive and active elementary gates.
inline Eigen::Matrix4d random_symplectic(std::mt19937_64& rng, double max_squeeze = 1.0) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> sq(-max_squeeze, max_squeeze);
  Eigen::Matrix4d s = local(rotation(angle(rng)), rotation(angle(rng)));
  s = local(single_squeezer(sq(rng)), single_squeezer(sq(rng))) * s;
  s = beam_splitter(angle(rng)) * s;
  s = two_mode_squeezer(sq(rng)) * s;
  s = local(rotation(angle(rng)), rotation(angle(rng))) * s;
  return s;
}

/// Random physical two-mode CM with symplectic spectrum {nu1, nu2}, nu >= 1/2.
inline CovarianceMatrix random_two_mode_cm(std::mt19937_64& rng, double max_thermal = 2.0) {
  std::uniform_real_distribution<double> th(0.0, max_thermal);
  const double nu1 = 0.5 + th(rng), nu2 = 0.5 + th(rng);
  const Eigen::Matrix4d s = random_symplectic(rng);
  const Eigen::Matrix4d w = Eigen::Vector4d(nu1, nu1, nu2, nu2).asDiagonal();
  Eigen::Matrix4d v = s * w * s.transpose();
  v = 0.5 * (v + v.transpose()).eval();
  return CovarianceMatrix(v);
}

/// Minimum PT symplectic eigenvalue from the seralian with -2 det C, computed
/// directly on the untransposed blocks.
inline double pt_min_eigenvalue_reference(const CovarianceMatrix& cm) {
  const Eigen::Matrix4d v = cm.entries();
  const double det_a = v.block<2, 2>(0, 0).determinant();
  const double det_b = v.block<2, 2>(2, 2).determinant();
  const double det_c = v.block<2, 2>(0, 2).determinant();
  const double delta = det_a + det_b - 2.0 * det_c;
  const double disc = delta * delta - 4.0 * v.determinant();
  return std::sqrt(0.5 * (delta - std::sqrt(std::max(0.0, disc))));
}

/// A - (alpha(A) + margin) I for Gaussian A: strictly stable with
/// spectral abscissa -margin.
inline Eigen::MatrixXd random_stable(std::mt19937_64& rng, int n, double margin) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = normal(rng) / std::sqrt(static_cast<double>(n));
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  const double alpha = es.eigenvalues().real().maxCoeff();
  return m - (alpha + margin) * Eigen::MatrixXd::Identity(n, n);
}

inline Eigen::MatrixXd random_psd(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = normal(rng);
  return b * b.transpose();
}

inline double spectral_radius(const Eigen::MatrixXd& a) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace magent::testing
