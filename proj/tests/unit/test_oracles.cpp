#include "doctest.h"

#include "bpcg/herding/discrete_measure.hpp"
#include "bpcg/oracles/oracles.hpp"

#include <cmath>
#include <random>

using namespace bpcg;

TEST_CASE("simplex projection oracle") {
  const Eigen::Vector3d inside(0.2, 0.3, 0.5);
  CHECK(oracles::simplex_projection_oracle(inside).isApprox(inside));
  CHECK(oracles::simplex_projection_oracle(Eigen::Vector3d(2, 0, 0)).isApprox(Eigen::Vector3d(1, 0, 0)));
  // Barycentric grid search with spacing 1/1413 (about 1e6 points).
  const Eigen::Vector3d x0(0.6, 0.6, -0.2);
  const Eigen::Vector3d p = oracles::simplex_projection_oracle(x0);
  const int m = 1413;
  double best = 1e300;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; i + j <= m; ++j) {
      const Eigen::Vector3d y(double(i) / m, double(j) / m, double(m - i - j) / m);
      best = std::min(best, (y - x0).squaredNorm());
    }
  CHECK(std::abs((p - x0).squaredNorm() - best) <= 1e-5);
}

TEST_CASE("assignment brute force") {
  Eigen::Matrix2d c;
  c << 0, 1, 1, 0;
  CHECK(oracles::assignment_bruteforce(c) == std::vector<int>{0, 1});
  c << 1, 0, 0, 1;
  CHECK(oracles::assignment_bruteforce(c) == std::vector<int>{1, 0});
  CHECK(oracles::assignment_bruteforce(Eigen::MatrixXd::Constant(1, 1, 3.0)) == std::vector<int>{0});
}

TEST_CASE("Jacobi eigenpairs") {
  Eigen::Matrix2d g;
  g << 1, 0, 0, -2;
  const auto e = oracles::dense_min_eigenpair(g);
  CHECK(e.value == doctest::Approx(-2.0));
  CHECK(std::abs(e.vector[1]) == doctest::Approx(1.0));
  const auto id = oracles::dense_min_eigenpair(Eigen::Matrix3d::Identity());
  CHECK(id.value == doctest::Approx(1.0));
  CHECK(id.vector.norm() == doctest::Approx(1.0));
}

TEST_CASE("MMD oracle") {
  const Kernel k(KernelKind::Gaussian);
  const Measure mu = Measure::uniform_box(1);
  DiscreteMeasure dirac{{Eigen::VectorXd::Zero(1)}, {1.0}};
  CHECK(oracles::mmd_numeric_oracle(k, mu, dirac) == doctest::Approx(0.14301203485975122).epsilon(1e-12));
  CHECK(std::abs(oracles::embedding_constant_oracle(k, mu) - 0.636661) <= 1e-5);
  // Doubling the order changes nothing at the 1e-9 level.
  const double a = oracles::mmd_numeric_oracle(Kernel(KernelKind::Matern32), Measure::uniform_box(1), dirac, 256);
  const double b = oracles::mmd_numeric_oracle(Kernel(KernelKind::Matern32), Measure::uniform_box(1), dirac, 512);
  CHECK(std::abs(a - b) < 1e-9);
}

TEST_CASE("MMD between identical discrete measures is zero") {
  // Bilinear form of xi - xi' with xi' = xi vanishes identically.
  const Kernel k(KernelKind::Matern52);
  DiscreteMeasure xi{{Eigen::Vector2d(0.1, 0.2), Eigen::Vector2d(-0.5, 0.3)}, {0.4, 0.6}};
  double energy = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const double w = xi.weights[i] * xi.weights[j];
      energy += w * k(xi.nodes[i], xi.nodes[j]) - 2.0 * w * k(xi.nodes[i], xi.nodes[j]) + w * k(xi.nodes[i], xi.nodes[j]);
    }
  CHECK(std::abs(energy) <= 1e-15);
}
