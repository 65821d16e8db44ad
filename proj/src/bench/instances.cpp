#include "bpcg/bench/instances.hpp"

#include "bpcg/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace bpcg::bench {

Atom default_start(const Objective& objective, const LinearMinimizationOracle& lmo) {
  return lmo.minimize(objective.gradient(Eigen::VectorXd::Zero(objective.dimension())));
}

namespace {

VectorInstance finish(std::string label, std::unique_ptr<Objective> obj, std::unique_ptr<LinearMinimizationOracle> lmo,
                      std::optional<double> f_star) {
  Atom start = default_start(*obj, *lmo);
  return VectorInstance{std::move(label), std::move(obj), std::move(lmo), std::move(start), f_star};
}

Eigen::VectorXd dirichlet_ones(int n, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = e(rng);
  return x / x.sum();
}

}  // namespace

VectorInstance make_simplex_instance(int n, std::uint64_t seed) {
  if (n < 1) throw ConfigError("simplex dimension must be positive");
  std::mt19937_64 rng(seed);
  return finish("simplex-" + std::to_string(n), std::make_unique<QuadraticDistance>(dirichlet_ones(n, rng)),
                std::make_unique<SimplexLmo>(n), 0.0);
}

VectorInstance make_birkhoff_instance(int n, std::uint64_t seed) {
  if (n < 1) throw ConfigError("Birkhoff dimension must be positive");
  std::mt19937_64 rng(seed);
  const Eigen::VectorXd theta = dirichlet_ones(n, rng);
  Eigen::MatrixXd x0 = Eigen::MatrixXd::Zero(n, n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int k = 0; k < n; ++k) {
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < n; ++i) x0(i, perm[i]) += theta[k];
  }
  return finish("birkhoff-" + std::to_string(n),
                std::make_unique<QuadraticDistance>(Eigen::Map<const Eigen::VectorXd>(x0.data(), x0.size())),
                std::make_unique<BirkhoffLmo>(n), 0.0);
}

VectorInstance make_lp_ball_instance(int n, double p, std::uint64_t seed) {
  if (n < 1) throw ConfigError("l_p ball dimension must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd x0(n);
  for (int i = 0; i < n; ++i) x0[i] = normal(rng);
  double norm = 0.0;
  for (int i = 0; i < n; ++i) norm += std::pow(std::abs(x0[i]), p);
  x0 *= 0.9 / std::pow(norm, 1.0 / p);
  return finish("lp-ball-" + std::to_string(n), std::make_unique<QuadraticDistance>(std::move(x0)),
                std::make_unique<LpBallLmo>(n, p), 0.0);
}

VectorInstance make_matrix_completion_instance(int n, std::vector<ObservedEntry> entries,
                                               std::optional<double> f_star) {
  return finish("matrix-completion-" + std::to_string(n),
                std::make_unique<MatrixCompletionLoss>(n, std::move(entries)), std::make_unique<SpectrahedronLmo>(n),
                f_star);
}

LowRankData synthetic_lowrank(int n, int rank, double noise, std::uint64_t seed, double observed_fraction) {
  if (n < 1 || rank < 1 || rank > n) throw ConfigError("synthetic low-rank data needs 1 <= rank <= n");
  if (noise < 0.0) throw ConfigError("noise level must be non-negative");
  if (!(observed_fraction > 0.0 && observed_fraction <= 1.0))
    throw ConfigError("observed fraction must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd u(n, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < n; ++i) u(i, j) = normal(rng);
  LowRankData data;
  data.n = n;
  data.ground_truth = u * u.transpose();
  data.ground_truth /= data.ground_truth.trace();
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (coin(rng) >= observed_fraction) continue;
      const double target = data.ground_truth(i, j) + (noise > 0.0 ? noise * normal(rng) : 0.0);
      data.entries.push_back({i, j, target});
      if (i != j) data.entries.push_back({j, i, target});
    }
  return data;
}

}  // namespace bpcg::bench
