#include "magent/linsys.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace magent;
using namespace magent::testing;
using doctest::Approx;

namespace {

double rel_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).norm() / b.norm();
}

}  // namespace

TEST_CASE("solve_lyapunov: decoupled examples") {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(8, 8);
  const auto v = solve_lyapunov(-id, 2.0 * id);
  CHECK((v.entries() - id).norm() < 1e-14);

  Eigen::VectorXd rates(8);
  rates << 1, 2, 3, 4, 5, 6, 7, 8;
  const Eigen::MatrixXd a = -Eigen::MatrixXd(rates.asDiagonal());
  const auto w = solve_lyapunov(a, id);
  for (int k = 0; k < 8; ++k) CHECK(w(k, k) == Approx(0.5 / rates(k)).epsilon(1e-14));
  CHECK((w.entries() - Eigen::MatrixXd(w.entries().diagonal().asDiagonal())).norm() < 1e-14);
}

TEST_CASE("solve_lyapunov: residual, symmetry, oracle on random systems") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> margin(0.5, 2.0);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_stable(rng, 8, margin(rng));
    const auto d = random_psd(rng, 8);
    const auto v = solve_lyapunov(a, d);
    CHECK(lyapunov_residual(a, d, v.entries()) <= kLyapunovResidualTol * d.norm());
    CHECK(v.entries() == v.entries().transpose());

    const auto st = stability(a);
    const double horizon = 20.0 / std::abs(st.max_real_part);
    const double step = 0.01 / spectral_radius(a);
    const auto oracle = integrate_lyapunov_oracle(a, d, horizon, step);
    CHECK(rel_diff(v.entries(), oracle) <= 1e-6);
  }
}

TEST_CASE("solve_lyapunov: scaling covariance") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_stable(rng, 8, 1.0);
    const auto d = random_psd(rng, 8);
    const auto v = solve_lyapunov(a, d).entries();
    // Powers of two scale every floating-point operation exactly.
    CHECK(solve_lyapunov(4.0 * a, 4.0 * d).entries() == v);
    CHECK(solve_lyapunov(0.125 * a, 0.125 * d).entries() == v);
    CHECK(rel_diff(solve_lyapunov(3.7 * a, 3.7 * d).entries(), v) < 1e-12);
  }
}

TEST_CASE("solve_lyapunov: errors") {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(4, 4);
  try {
    solve_lyapunov(id, id);
    FAIL("expected UnstableSystem");
  } catch (const UnstableSystem& e) {
    CHECK_FALSE(e.report().stable);
    CHECK(e.report().max_real_part == Approx(1.0));
  }
  // Marginal: real part inside [-1e-12, 0) is refused.
  CHECK_THROWS_AS(solve_lyapunov(-1e-13 * id, id), UnstableSystem);

  // Strictly stable but with eigenvalue sums spanning 4e-12 .. 20.
  Eigen::MatrixXd a = -10.0 * Eigen::MatrixXd::Identity(4, 4);
  a(0, 0) = -2e-12;
  a(1, 1) = -2e-12;
  CHECK_THROWS_AS(solve_lyapunov(a, id), NearSingular);

  Eigen::MatrixXd asym = id;
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(solve_lyapunov(-id, asym), InvalidArgument);
  CHECK_THROWS_AS(solve_lyapunov(-id, Eigen::MatrixXd::Identity(6, 6)), InvalidArgument);
}

TEST_CASE("stability") {
  const auto s = stability(-Eigen::MatrixXd::Identity(8, 8));
  CHECK(s.stable);
  CHECK(s.max_real_part == -1.0);
  CHECK(s.eigenvalues.size() == 8);

  // Lossless beamsplitter pair: purely imaginary spectrum.
  Eigen::MatrixXd lossless = Eigen::MatrixXd::Zero(4, 4);
  lossless(0, 3) = 2.0;
  lossless(1, 2) = -2.0;
  lossless(2, 1) = 2.0;
  lossless(3, 0) = -2.0;
  const auto m = stability(lossless);
  CHECK_FALSE(m.stable);
  CHECK(std::abs(m.max_real_part) < 1e-14);
}

TEST_CASE("integrate_lyapunov_oracle") {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(8, 8);
  const auto v = integrate_lyapunov_oracle(-id, 2.0 * id, 20.0, 0.01);
  CHECK((v - id).cwiseAbs().maxCoeff() < 1e-8);

  // Truncation: V(H) = (1 - e^{-2H}) I for A = -I, D = 2I.
  const double e12 = (integrate_lyapunov_oracle(-id, 2.0 * id, 12.0, 0.001) - id).norm();
  const double e10 = (integrate_lyapunov_oracle(-id, 2.0 * id, 10.0, 0.001) - id).norm();
  CHECK(e10 > e12);
  CHECK(e10 == Approx(std::sqrt(8.0) * std::exp(-20.0)).epsilon(1e-3));
  CHECK(e12 == Approx(std::sqrt(8.0) * std::exp(-24.0)).epsilon(1e-2));

  CHECK_THROWS_AS(integrate_lyapunov_oracle(-id, id, 5.0, 0.01), InvalidArgument);
  CHECK_THROWS_AS(integrate_lyapunov_oracle(-id, id, 20.0, 0.1), InvalidArgument);
  CHECK_THROWS_AS(integrate_lyapunov_oracle(id, id, 20.0, 0.01), UnstableSystem);
}
