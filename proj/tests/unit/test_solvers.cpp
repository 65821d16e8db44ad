#include "doctest.h"

#include "bpcg/core/errors.hpp"
#include "bpcg/oracles/oracles.hpp"
#include "bpcg/solvers/solvers.hpp"
#include "bpcg/solvers/step_size.hpp"
#include "bpcg/solvers/trace_checks.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

using namespace bpcg;

namespace {

Eigen::VectorXd interior_point(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.5, 1.5);
  Eigen::VectorXd x(n);
  for (auto& v : x) v = unit(rng);
  return x / x.sum();
}

SolverConfig config(int iterations, double tolerance) {
  SolverConfig c;
  c.max_iterations = iterations;
  c.dual_gap_tolerance = tolerance;
  return c;
}

}  // namespace

TEST_CASE("step-size rules") {
  const QuadraticDistance f(Eigen::Vector2d(0.0, 0.0));
  const Eigen::Vector2d x(1.0, 0.0), d(1.0, 0.0);
  // f(x - l d) = (1 - l)^2 is minimised exactly at l = 1.
  CHECK(step_size(f, x, d, 1.0, StepSizeRule::ExactLineSearch) == 1.0);
  CHECK(step_size(f, x, d, 0.3, StepSizeRule::ExactLineSearch) == 0.3);

  LineProblem line;
  line.slope = 2.0;
  line.norm_sq = 1.0;
  StepSizer shortstep(StepSizeRule::ShortStep, 2.0);
  CHECK(shortstep(line, std::numeric_limits<double>::infinity()) == 1.0);
  CHECK_THROWS_AS(StepSizer(StepSizeRule::ShortStep, std::nullopt), ConfigError);

  const QuadraticDistance g(Eigen::Vector2d(-1.0, 0.0));
  CHECK(step_size(g, x, d, 1.0, StepSizeRule::ExactLineSearch) == 1.0);
  CHECK(step_size(g, x, d, 1.0, StepSizeRule::ShortStep) == 1.0);

  // Golden-section fallback and adaptive rule on a non-quadratic line.
  LineProblem quartic;
  quartic.value0 = 1.0;
  quartic.slope = 4.0;
  quartic.norm_sq = 1.0;
  quartic.value_at = [](double l) { return std::pow(1.0 - l, 4); };
  quartic.slope_at = [](double l) { return 4.0 * std::pow(1.0 - l, 3); };
  StepSizer exact(StepSizeRule::ExactLineSearch, std::nullopt);
  CHECK(exact(quartic, 2.0) == doctest::Approx(1.0).epsilon(1e-6));
  StepSizer adaptive(StepSizeRule::Adaptive, std::nullopt);
  const double la = adaptive(quartic, 2.0);
  CHECK(la > 0.0);
  CHECK(quartic.value_at(la) <= quartic.value0);
}

TEST_CASE("select_step") {
  CHECK(select_step(2.0, 1.0, 1.0) == StepChoice::Pairwise);
  CHECK(select_step(0.4, 1.0, 1.0) == StepChoice::FrankWolfe);
  CHECK(select_step(0.6, 1.0, 2.0) == StepChoice::Pairwise);
  for (double scale : {1e-6, 0.5, 3.0, 1e8})
    CHECK(select_step(0.6 * scale, 1.0 * scale, 2.0) == StepChoice::Pairwise);
}

TEST_CASE("config validation") {
  SolverConfig c;
  c.k_sc = 0.5;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SolverConfig{};
  c.lazy_accuracy = 0.9;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SolverConfig{};
  c.max_iterations = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CHECK(step_size_rule_from_string("adaptive") == StepSizeRule::Adaptive);
  CHECK_THROWS_AS(step_size_rule_from_string("bogus"), ConfigError);
}

TEST_CASE("BPCG from the optimal vertex stops immediately") {
  const QuadraticDistance f(Eigen::Vector3d(1.0, 0.0, 0.0));
  const SimplexLmo lmo(3);
  const auto r = run_bpcg(f, lmo, make_basis_vertex(0, 3), config(100, 1e-9));
  CHECK(r.trace.empty());
  CHECK(r.trace.converged);
}

TEST_CASE("BPCG on the uniform-center simplex matches the projection oracle") {
  const Eigen::VectorXd center = Eigen::VectorXd::Constant(10, 0.1);
  const QuadraticDistance f(center);
  const SimplexLmo lmo(10);
  const auto r = run_bpcg(f, lmo, make_basis_vertex(0, 10), config(1000, 1e-12));
  const double opt = oracles::simplex_distance_optimum(center);
  CHECK(std::abs(f.value(r.active.iterate()) - opt) <= 1e-10);
  CHECK(r.active.size() == 10);
  r.active.check_invariants();
}

TEST_CASE("BPCG traces satisfy the per-step inequalities") {
  const Eigen::VectorXd center = interior_point(200, 1);
  const QuadraticDistance f(center);
  const SimplexLmo lmo(200);
  const auto r = run_bpcg(f, lmo, make_basis_vertex(0, 200), config(1000, 0.0));
  const auto bound = check_primal_bound(r.trace, 0.0, [](std::size_t t) { return 16.0 / static_cast<double>(t); });
  CHECK_MESSAGE(bound.ok(), bound.summary());
  CHECK(check_gap_inequality(r.trace, 1.0).ok());
  CHECK(check_progress_inequality(r.trace, 2.0, lmo.diameter()).ok());
  CHECK(check_no_swap(r.trace).ok());
  CHECK(check_drop_bound(r.trace).ok());
  CHECK(check_monotone(r.trace).ok());
  CHECK(check_record_invariants(r.trace).ok());
  CHECK(r.trace.lmo_calls() == r.trace.size());
}

TEST_CASE("BPCG with a sparsity factor") {
  const Eigen::VectorXd center = interior_point(50, 2);
  const QuadraticDistance f(center);
  const SimplexLmo lmo(50);
  SolverConfig c = config(500, 0.0);
  c.k_sc = 2.5;
  const auto r = run_bpcg(f, lmo, make_basis_vertex(0, 50), c);
  CHECK(check_gap_inequality(r.trace, 2.5).ok());
}

TEST_CASE("lazy BPCG") {
  const Eigen::VectorXd center = interior_point(200, 1);
  const QuadraticDistance f(center);
  const SimplexLmo lmo(200);
  const auto lazy = run_lazy_bpcg(f, lmo, make_basis_vertex(0, 200), config(5000, 1e-6));
  CHECK(lazy.trace.converged);
  CHECK(f.value(lazy.active.iterate()) <= 1e-6);
  CHECK(lazy.trace.lmo_calls() < lazy.trace.size());
  std::size_t non_local = 0;
  for (const auto& rec : lazy.trace.records()) non_local += rec.lmo_called ? 1 : 0;
  CHECK(lazy.trace.lmo_calls() == 1 + non_local);
  CHECK(check_record_invariants(lazy.trace).ok());
  CHECK(check_monotone(lazy.trace).ok());
  // Phi is non-increasing and equals Phi_0 2^{-gap steps}.
  double phi = *lazy.trace.initial_phi;
  std::size_t halvings = 0;
  for (const auto& rec : lazy.trace.records()) {
    CHECK(*rec.phi <= phi);
    phi = *rec.phi;
    if (rec.kind == StepKind::GapStep) ++halvings;
  }
  CHECK(phi == std::ldexp(*lazy.trace.initial_phi, -static_cast<int>(halvings)));

  const auto full = run_bpcg(f, lmo, make_basis_vertex(0, 200), config(5000, 1e-6));
  CHECK(full.trace.converged);
  CHECK(lazy.trace.size() <= 5000);
}

TEST_CASE("vanilla FW with equal weights averages visited vertices") {
  const Eigen::VectorXd center = interior_point(6, 4);
  const QuadraticDistance f(center);
  const SimplexLmo lmo(6);
  const auto r = run_vanilla_fw(f, lmo, make_basis_vertex(0, 6), config(40, 0.0), VanillaRule::EqualWeight);
  Eigen::VectorXd avg = make_basis_vertex(0, 6).to_dense();
  Eigen::VectorXd x = avg;
  // Rebuild the average from the LMO answers at the recorded iterates.
  std::size_t visits = 1;
  for (std::size_t t = 0; t < r.trace.size(); ++t) {
    const Atom w = lmo.minimize(f.gradient(x));
    avg += w.to_dense();
    ++visits;
    x = avg / static_cast<double>(visits);
  }
  CHECK((r.active.iterate() - x).lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("PCG and AFW reach the projection optimum") {
  const Eigen::VectorXd center = interior_point(10, 9);
  const QuadraticDistance f(center);
  const SimplexLmo lmo(10);
  const double opt = oracles::simplex_distance_optimum(center);
  const auto pcg = run_pcg(f, lmo, make_basis_vertex(0, 10), config(2000, 1e-12));
  const auto afw = run_afw(f, lmo, make_basis_vertex(0, 10), config(2000, 1e-12));
  CHECK(std::abs(f.value(pcg.active.iterate()) - opt) <= 1e-8);
  CHECK(std::abs(f.value(afw.active.iterate()) - opt) <= 1e-8);
  CHECK(check_monotone(pcg.trace).ok());
  CHECK(check_monotone(afw.trace).ok());
}

TEST_CASE("AFW and vanilla FW coincide on the l5 ball") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> normal;
  Eigen::VectorXd center(100);
  for (auto& v : center) v = normal(rng);
  center *= 0.5 / center.lpNorm<5>();
  const QuadraticDistance f(center);
  const LpBallLmo lmo(100, 5.0);
  const Atom x0 = lmo.minimize(Eigen::VectorXd::Ones(100));
  const auto fw = run_vanilla_fw(f, lmo, x0, config(200, 0.0));
  const auto afw = run_afw(f, lmo, x0, config(200, 0.0));
  REQUIRE(fw.trace.size() == afw.trace.size());
  for (std::size_t t = 0; t < fw.trace.size(); ++t) {
    CHECK(afw.trace.records()[t].kind == StepKind::FWStep);
    CHECK(afw.trace.records()[t].primal == fw.trace.records()[t].primal);
  }
}

TEST_CASE("short-step and adaptive BPCG converge") {
  const Eigen::VectorXd center = interior_point(30, 5);
  const QuadraticDistance f(center);
  const SimplexLmo lmo(30);
  for (StepSizeRule rule : {StepSizeRule::ShortStep, StepSizeRule::Adaptive}) {
    SolverConfig c = config(3000, 1e-8);
    c.step_size = rule;
    const auto r = run_bpcg(f, lmo, make_basis_vertex(0, 30), c);
    CHECK(r.trace.converged);
    CHECK(check_monotone(r.trace).ok());
    // Backtracking may settle on an estimate up to twice L.
    const double l_eff = rule == StepSizeRule::Adaptive ? 4.0 : 2.0;
    CHECK(check_progress_inequality(r.trace, l_eff, lmo.diameter()).ok());
  }
}

TEST_CASE("BPCG on the Birkhoff polytope and the spectrahedron") {
  std::mt19937_64 rng(8);
  const int n = 6;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Eigen::VectorXd center = Eigen::VectorXd::Zero(n * n);
  for (int k = 0; k < 4; ++k) {
    std::shuffle(p.begin(), p.end(), rng);
    center += 0.25 * make_permutation(p).to_dense();
  }
  const QuadraticDistance f(center);
  const BirkhoffLmo lmo(n);
  std::iota(p.begin(), p.end(), 0);
  const auto r = run_bpcg(f, lmo, make_permutation(p), config(3000, 1e-10));
  CHECK(f.value(r.active.iterate()) <= 1e-8);
  CHECK(check_no_swap(r.trace).ok());

  Eigen::VectorXd u = Eigen::VectorXd::Ones(4).normalized();
  const Eigen::MatrixXd truth = u * u.transpose();
  std::vector<ObservedEntry> entries;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) entries.push_back({i, j, truth(i, j)});
  const MatrixCompletionLoss loss(4, entries);
  const SpectrahedronLmo slmo(4);
  const auto mc = run_bpcg(loss, slmo, make_rank1(Eigen::Vector4d(1, 0, 0, 0)), config(2000, 1e-10));
  CHECK(loss.value(mc.active.iterate()) <= 1e-6);
}
