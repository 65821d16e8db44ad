#include "bpcg/herding/herding.hpp"

#include "bpcg/core/errors.hpp"
#include "bpcg/herding/herding_model.hpp"
#include "bpcg/solvers/algorithms.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace bpcg {

namespace {

template <typename Loop>
HerdingResult run_with(const EmbeddingCache& cache, const Eigen::VectorXd& x0, const SolverConfig& config,
                       const HerdingLmoOptions& lmo, Loop loop) {
  config.validate();
  HerdingModel model(cache, x0, StepSizer(config.step_size, 2.0), lmo);
  HerdingResult result;
  result.trace = loop(model);
  result.max_mmd_drift = model.max_drift();
  result.drift_checks = model.drift_checks();
  result.measure = DiscreteMeasure::from_active_set(model.active());
  return result;
}

}  // namespace

HerdingResult run_bpcg_herding(const EmbeddingCache& cache, const Eigen::VectorXd& x0, const SolverConfig& config,
                               const HerdingLmoOptions& lmo) {
  return run_with(cache, x0, config, lmo, [&](HerdingModel& m) { return detail::run_bpcg_loop(m, config); });
}

HerdingResult run_lazy_bpcg_herding(const EmbeddingCache& cache, const Eigen::VectorXd& x0,
                                    const SolverConfig& config, const HerdingLmoOptions& lmo) {
  return run_with(cache, x0, config, lmo, [&](HerdingModel& m) { return detail::run_lazy_bpcg_loop(m, config); });
}

HerdingResult run_vanilla_herding(const EmbeddingCache& cache, const Eigen::VectorXd& x0, VanillaRule rule,
                                  const SolverConfig& config, const HerdingLmoOptions& lmo) {
  return run_with(cache, x0, config, lmo,
                  [&](HerdingModel& m) { return detail::run_vanilla_loop(m, config, rule); });
}

HerdingResult run_afw_herding(const EmbeddingCache& cache, const Eigen::VectorXd& x0, const SolverConfig& config,
                              const HerdingLmoOptions& lmo) {
  return run_with(cache, x0, config, lmo, [&](HerdingModel& m) { return detail::run_afw_loop(m, config); });
}

HerdingResult run_pcg_herding(const EmbeddingCache& cache, const Eigen::VectorXd& x0, const SolverConfig& config,
                              const HerdingLmoOptions& lmo) {
  return run_with(cache, x0, config, lmo, [&](HerdingModel& m) { return detail::run_pcg_loop(m, config); });
}

SbqResult run_sbq(const EmbeddingCache& cache, const Eigen::MatrixXd& candidates, const Eigen::VectorXd& candidate_z,
                  std::size_t n_nodes, double ridge) {
  const Eigen::Index p = candidates.cols();
  if (candidate_z.size() != p) throw ContractViolation("one embedding value per SBQ candidate is required");
  if (candidates.rows() != cache.dimension()) throw ContractViolation("SBQ candidates have the wrong dimension");
  if (n_nodes == 0 || static_cast<Eigen::Index>(n_nodes) > p)
    throw ConfigError("SBQ needs 1 <= n_nodes <= number of candidates");

  const auto n = static_cast<Eigen::Index>(n_nodes);
  // Rows of v are L^{-1} K(S, c) for the Cholesky factor L of G_S + ridge I;
  // alpha = L^{-1} z_S. Adding c raises z^T G^{-1} z by
  // (z_c - v_c . alpha)^2 / (1 + ridge - |v_c|^2).
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, p);
  Eigen::VectorXd vnorm = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(n);
  std::vector<bool> taken(static_cast<std::size_t>(p), false);
  std::vector<Eigen::Index> chosen;
  SbqResult out;
  double explained = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index best = -1;
    double best_gain = -1.0, best_schur = 0.0;
    for (Eigen::Index c = 0; c < p; ++c) {
      if (taken[static_cast<std::size_t>(c)]) continue;
      const double schur = 1.0 + ridge - vnorm[c];
      if (!(schur > 1e-12)) continue;
      const double resid = candidate_z[c] - v.col(c).head(k).dot(alpha.head(k));
      const double gain = resid * resid / schur;
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
        best_schur = schur;
      }
    }
    if (best < 0) throw SolverError("SBQ ran out of linearly independent candidates");
    const double lkk = std::sqrt(best_schur);
    const Eigen::VectorXd lrow = v.col(best).head(k);
    alpha[k] = (candidate_z[best] - lrow.dot(alpha.head(k))) / lkk;
    const Eigen::VectorXd col = cache.pool_column(candidates.col(best));
    // pool_column evaluates against the cache pool; recompute when the
    // candidates are a different set.
    const bool same_pool = candidates.cols() == cache.pool().cols() && candidates == cache.pool();
    for (Eigen::Index c = 0; c < p; ++c) {
      const double kc = same_pool ? col[c] : cache.kernel()(candidates.col(best), candidates.col(c));
      const double entry = (kc - lrow.dot(v.col(c).head(k))) / lkk;
      v(k, c) = entry;
      vnorm[c] += entry * entry;
    }
    taken[static_cast<std::size_t>(best)] = true;
    chosen.push_back(best);
    explained += best_gain;
    out.mmd_by_nodes.push_back(std::max(0.0, cache.c_mu() - explained));
  }

  Eigen::MatrixXd gram(n, n);
  Eigen::VectorXd z(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    z[i] = candidate_z[chosen[static_cast<std::size_t>(i)]];
    for (Eigen::Index j = 0; j < n; ++j)
      gram(i, j) = cache.kernel()(candidates.col(chosen[static_cast<std::size_t>(i)]),
                                  candidates.col(chosen[static_cast<std::size_t>(j)]));
    gram(i, i) += ridge;
  }
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) throw SolverError("SBQ Gram system is not positive definite");
  const Eigen::VectorXd w = llt.solve(z);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.measure.nodes.push_back(candidates.col(chosen[static_cast<std::size_t>(i)]));
    out.measure.weights.push_back(w[i]);
  }
  return out;
}

SbqResult run_sbq(const EmbeddingCache& cache, std::size_t n_nodes, double ridge) {
  return run_sbq(cache, cache.pool(), cache.pool_z(), n_nodes, ridge);
}

DiscreteMeasure run_monte_carlo(const Measure& mu, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ConfigError("Monte Carlo needs at least one sample");
  std::mt19937_64 rng(seed);
  DiscreteMeasure xi;
  xi.nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) xi.nodes.push_back(mu.sample(rng));
  xi.weights.assign(n, 1.0 / static_cast<double>(n));
  return xi;
}

}  // namespace bpcg
