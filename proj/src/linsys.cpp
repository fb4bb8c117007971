#include "magent/linsys.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace magent {

namespace {

void require_square(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw InvalidArgument(std::string(what) + ": matrix must be square and non-empty");
  }
  if (!m.allFinite()) throw InvalidArgument(std::string(what) + ": non-finite entry");
}

void require_compatible(const Eigen::MatrixXd& drift, const Eigen::MatrixXd& diffusion) {
  require_square(drift, "drift");
  require_square(diffusion, "diffusion");
  if (drift.rows() != diffusion.rows()) {
    throw InvalidArgument("drift and diffusion dimensions differ");
  }
  if ((diffusion - diffusion.transpose()).cwiseAbs().maxCoeff() >
      kSymmetryTol * std::max(1.0, diffusion.cwiseAbs().maxCoeff())) {
    throw InvalidArgument("diffusion matrix is not symmetric");
  }
}

double spectral_radius(const StabilityReport& report) {
  double rho = 0.0;
  for (const auto& lambda : report.eigenvalues) rho = std::max(rho, std::abs(lambda));
  return rho;
}

StabilityReport require_strictly_stable(const Eigen::MatrixXd& drift, const char* what) {
  auto report = stability(drift);
  if (report.max_real_part >= -kMarginalStability) {
    throw UnstableSystem(std::string(what) + ": drift matrix not strictly stable (max real part " +
                             std::to_string(report.max_real_part) + ")",
                         report);
  }
  return report;
}

}  // namespace

StabilityReport stability(const Eigen::MatrixXd& drift) {
  require_square(drift, "stability");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(drift, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NumericalFailure("stability: eigen-solve failed");
  StabilityReport report;
  report.max_real_part = -std::numeric_limits<double>::infinity();
  for (const auto& lambda : solver.eigenvalues()) {
    report.eigenvalues.push_back(lambda);
    report.max_real_part = std::max(report.max_real_part, lambda.real());
  }
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
            [](const auto& x, const auto& y) {
              return x.real() != y.real() ? x.real() > y.real() : x.imag() > y.imag();
            });
  report.stable = report.max_real_part < 0.0;
  return report;
}

CovarianceMatrix solve_lyapunov(const Eigen::MatrixXd& drift, const Eigen::MatrixXd& diffusion) {
  require_compatible(drift, diffusion);
  require_strictly_stable(drift, "solve_lyapunov");

  const Eigen::Index n = drift.rows();
  if (n % 2 != 0) {
    throw InvalidArgument("solve_lyapunov: covariance matrices need an even dimension");
  }
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  // Column-major vec: vec(A V) = (I (x) A) vec V, vec(V A^T) = (A (x) I) vec V.
  Eigen::MatrixXd op = Eigen::MatrixXd::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      op.block(i * n, j * n, n, n) += identity(i, j) * drift + drift(i, j) * identity;
    }
  }

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(op);
  const double rcond = lu.rcond();
  if (!(rcond > 1.0 / kMaxConditionNumber)) {
    throw NearSingular("solve_lyapunov: condition estimate " + std::to_string(1.0 / rcond) +
                       " exceeds " + std::to_string(kMaxConditionNumber));
  }
  const Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(diffusion.data(), n * n);
  const Eigen::VectorXd sol = lu.solve(rhs);
  Eigen::MatrixXd v = Eigen::Map<const Eigen::MatrixXd>(sol.data(), n, n);
  v = 0.5 * (v + v.transpose()).eval();
  return CovarianceMatrix(std::move(v));
}

double lyapunov_residual(const Eigen::MatrixXd& drift, const Eigen::MatrixXd& diffusion,
                         const Eigen::MatrixXd& v) {
  return (drift * v + v * drift.transpose() + diffusion).norm();
}

Eigen::MatrixXd integrate_lyapunov_oracle(const Eigen::MatrixXd& drift,
                                          const Eigen::MatrixXd& diffusion, double horizon,
                                          double step) {
  require_compatible(drift, diffusion);
  const auto report = require_strictly_stable(drift, "integrate_lyapunov_oracle");
  const double min_horizon = 10.0 / std::abs(report.max_real_part);
  const double max_step = 0.01 / spectral_radius(report);
  if (!(horizon >= min_horizon * (1.0 - 1e-12))) {
    throw InvalidArgument("integrate_lyapunov_oracle: horizon " + std::to_string(horizon) +
                          " shorter than 10/|max real part| = " + std::to_string(min_horizon));
  }
  if (!(step > 0.0) || step > max_step * (1.0 + 1e-12)) {
    throw InvalidArgument("integrate_lyapunov_oracle: step must lie in (0, " +
                          std::to_string(max_step) + "]");
  }

  const auto rhs = [&](const Eigen::MatrixXd& v) -> Eigen::MatrixXd {
    Eigen::MatrixXd av = drift * v;
    return av + av.transpose() + diffusion;
  };

  const auto steps = static_cast<long>(std::ceil(horizon / step - 1e-9));
  const double h = horizon / static_cast<double>(steps);
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(drift.rows(), drift.cols());
  for (long k = 0; k < steps; ++k) {
    const Eigen::MatrixXd k1 = rhs(v);
    const Eigen::MatrixXd k2 = rhs(v + 0.5 * h * k1);
    const Eigen::MatrixXd k3 = rhs(v + 0.5 * h * k2);
    const Eigen::MatrixXd k4 = rhs(v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return 0.5 * (v + v.transpose());
}

}  // namespace magent
