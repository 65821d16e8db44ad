#include "doctest.h"

#include "bpcg/core/errors.hpp"
#include "bpcg/lmo/assignment.hpp"
#include "bpcg/lmo/lmo.hpp"
#include "bpcg/oracles/oracles.hpp"

#include <cmath>
#include <algorithm>
#include <numeric>
#include <random>

using namespace bpcg;

namespace {

Eigen::VectorXd dense(const Atom& a) { return a.to_dense(); }

}  // namespace

TEST_CASE("simplex LMO") {
  CHECK(simplex_lmo(Eigen::Vector3d(3, 1, 2)) == make_basis_vertex(1, 3));
  CHECK(simplex_lmo(Eigen::Vector3d(0, 0, 0)) == make_basis_vertex(0, 3));
  CHECK(simplex_lmo(Eigen::Vector3d(-1, 5, 5)) == make_basis_vertex(0, 3));
  CHECK_THROWS_AS(simplex_lmo(Eigen::VectorXd()), ContractViolation);
  CHECK(SimplexLmo(5).diameter() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("Birkhoff LMO") {
  Eigen::Matrix2d c;
  c << 0, 1, 1, 0;
  CHECK(birkhoff_lmo(c) == make_permutation({0, 1}));
  c << 1, 0, 0, 1;
  CHECK(birkhoff_lmo(c) == make_permutation({1, 0}));
  CHECK_THROWS_AS(birkhoff_lmo(Eigen::MatrixXd::Zero(2, 3)), ContractViolation);
  CHECK(BirkhoffLmo(8).diameter() == doctest::Approx(4.0));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::MatrixXd m(4, 4);
    for (auto& v : m.reshaped()) v = unit(rng);
    const auto map = solve_assignment(m);
    const auto ref = oracles::assignment_bruteforce(m);
    double a = 0.0, b = 0.0;
    for (int i = 0; i < 4; ++i) {
      a += m(i, map[static_cast<std::size_t>(i)]);
      b += m(i, ref[static_cast<std::size_t>(i)]);
    }
    CHECK(a == doctest::Approx(b).epsilon(1e-14));
  }
  // Larger instances against sampled permutations.
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 30;
    Eigen::MatrixXd m(n, n);
    for (auto& v : m.reshaped()) v = unit(rng);
    const auto map = solve_assignment(m);
    double best = 0.0;
    for (int i = 0; i < n; ++i) best += m(i, map[static_cast<std::size_t>(i)]);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int s = 0; s < 200; ++s) {
      std::shuffle(p.begin(), p.end(), rng);
      double cost = 0.0;
      for (int i = 0; i < n; ++i) cost += m(i, p[static_cast<std::size_t>(i)]);
      CHECK(best <= cost + 1e-12);
    }
  }
}

TEST_CASE("l_p ball LMO") {
  CHECK(dense(lp_ball_lmo(Eigen::Vector3d(1, 0, 0), 5.0)).isApprox(Eigen::Vector3d(-1, 0, 0)));
  const Eigen::Vector4d c(0.3, -1.2, 2.0, 0.1);
  CHECK(dense(lp_ball_lmo(c, 2.0)).isApprox(-c / c.norm(), 1e-14));
  CHECK_THROWS_AS(lp_ball_lmo(Eigen::Vector3d::Zero(), 5.0), ContractViolation);

  const Eigen::VectorXd v = dense(lp_ball_lmo(Eigen::Vector2d(1, 1), 5.0));
  CHECK(v[0] == v[1]);
  CHECK(std::pow(std::pow(std::abs(v[0]), 5) + std::pow(std::abs(v[1]), 5), 0.2) == doctest::Approx(1.0).epsilon(1e-12));
  const double sampled = oracles::lp_sphere_min_2d(Eigen::Vector2d(1, 1), 5.0);
  CHECK(std::abs(v.sum() - sampled) <= 1e-4);

  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::VectorXd d(20);
    for (auto& x : d) x = normal(rng);
    const Eigen::VectorXd w = dense(lp_ball_lmo(d, 5.0));
    CHECK(w.lpNorm<5>() == doctest::Approx(1.0).epsilon(1e-10));
    const double q = 5.0 / 4.0;
    double dual = 0.0;
    for (double x : d) dual += std::pow(std::abs(x), q);
    CHECK(d.dot(w) == doctest::Approx(-std::pow(dual, 1.0 / q)).epsilon(1e-10));
  }
  CHECK(LpBallLmo(1000, 5.0).diameter() == doctest::Approx(2.0 * std::pow(1000.0, 0.3)));
}

TEST_CASE("spectrahedron LMO") {
  Eigen::Matrix2d g;
  g << 1, 0, 0, -2;
  const auto u = std::get<Rank1Factor>(spectrahedron_lmo(g).payload()).u;
  CHECK(std::abs(u[1]) == doctest::Approx(1.0));
  CHECK(std::abs(u[0]) <= 1e-8);

  const auto ue = std::get<Rank1Factor>(spectrahedron_lmo(Eigen::Matrix3d::Identity()).payload()).u;
  CHECK(ue.isApprox(Eigen::Vector3d(1, 0, 0)));

  Eigen::Matrix2d asym;
  asym << 0, 1, 0, 0;
  CHECK_THROWS_AS(spectrahedron_lmo(asym), ContractViolation);

  std::mt19937_64 rng(17);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::MatrixXd a(6, 6);
    for (auto& x : a.reshaped()) x = normal(rng);
    const Eigen::MatrixXd s = 0.5 * (a + a.transpose());
    const auto v = std::get<Rank1Factor>(spectrahedron_lmo(s).payload()).u;
    const auto ref = oracles::dense_min_eigenpair(s);
    CHECK(v.dot(s * v) == doctest::Approx(ref.value).epsilon(1e-6));
    CHECK((s * v - v.dot(s * v) * v).norm() <= 1e-8 * s.norm() * 1.0000001);
  }

  PowerIterationOptions tight;
  tight.max_iterations = 1;
  Eigen::MatrixXd a(6, 6);
  for (auto& x : a.reshaped()) x = normal(rng);
  CHECK_THROWS_AS(spectrahedron_lmo(0.5 * (a + a.transpose()), tight), PowerIterationError);
}

TEST_CASE("LMO outputs beat random feasible points") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> normal;
  std::exponential_distribution<double> expo(1.0);
  const int n = 5;
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd c(n);
    for (auto& x : c) x = normal(rng);
    const double simplex_best = simplex_lmo(c).dot(c);
    const double ball_best = lp_ball_lmo(c, 3.0).dot(c);
    Eigen::MatrixXd cm(n, n);
    for (auto& x : cm.reshaped()) x = normal(rng);
    const Eigen::MatrixXd cs = 0.5 * (cm + cm.transpose());
    const Eigen::VectorXd cm_flat = Eigen::Map<const Eigen::VectorXd>(cm.data(), n * n);
    const Eigen::VectorXd cs_flat = Eigen::Map<const Eigen::VectorXd>(cs.data(), n * n);
    const double birk_best = BirkhoffLmo(n).minimize(cm_flat).dot(cm_flat);
    const double spec_best = SpectrahedronLmo(n).minimize(cs_flat).dot(cs_flat);
    for (int s = 0; s < 1000; ++s) {
      Eigen::VectorXd p(n);
      for (auto& x : p) x = expo(rng);
      p /= p.sum();
      CHECK(simplex_best <= c.dot(p) + 1e-12);
      Eigen::VectorXd b(n);
      for (auto& x : b) x = normal(rng);
      b /= b.lpNorm<3>();
      CHECK(ball_best <= c.dot(b) + 1e-12);
      // Doubly stochastic point: a convex combination of two permutations.
      std::vector<int> p1(n), p2(n);
      std::iota(p1.begin(), p1.end(), 0);
      std::iota(p2.begin(), p2.end(), 0);
      std::shuffle(p1.begin(), p1.end(), rng);
      std::shuffle(p2.begin(), p2.end(), rng);
      const double t = p[0];
      double ds = 0.0;
      for (int i = 0; i < n; ++i) ds += t * cm(i, p1[static_cast<std::size_t>(i)]) + (1 - t) * cm(i, p2[static_cast<std::size_t>(i)]);
      CHECK(birk_best <= ds + 1e-12);
      Eigen::VectorXd u(n);
      for (auto& x : u) x = normal(rng);
      u.normalize();
      CHECK(spec_best <= u.dot(cs * u) + 1e-7);
    }
  }
}
