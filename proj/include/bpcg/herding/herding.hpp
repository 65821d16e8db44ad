#ifndef BPCG_HERDING_HERDING_HPP
#define BPCG_HERDING_HERDING_HPP

#include "bpcg/core/trace.hpp"
#include "bpcg/herding/discrete_measure.hpp"
#include "bpcg/herding/embedding.hpp"
#include "bpcg/herding/herding_lmo.hpp"
#include "bpcg/solvers/config.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace bpcg {

/// Quadrature rule of a herding run. The trace stores MMD^2 in its primal
/// column.
struct HerdingResult {
  DiscreteMeasure measure;
  RunTrace trace;
  /// Largest gap between incremental and from-scratch MMD^2 at the periodic
  /// checks.
  double max_mmd_drift = 0.0;
  std::size_t drift_checks = 0;
};

HerdingResult run_bpcg_herding(const EmbeddingCache& cache, const Eigen::VectorXd& x0, const SolverConfig& config,
                               const HerdingLmoOptions& lmo = {});
HerdingResult run_lazy_bpcg_herding(const EmbeddingCache& cache, const Eigen::VectorXd& x0,
                                    const SolverConfig& config, const HerdingLmoOptions& lmo = {});
/// Classical kernel herding. With VanillaRule::EqualWeight the weights after
/// T distinct nodes are 1/(T+1) each.
HerdingResult run_vanilla_herding(const EmbeddingCache& cache, const Eigen::VectorXd& x0, VanillaRule rule,
                                  const SolverConfig& config, const HerdingLmoOptions& lmo = {});
HerdingResult run_afw_herding(const EmbeddingCache& cache, const Eigen::VectorXd& x0, const SolverConfig& config,
                              const HerdingLmoOptions& lmo = {});
HerdingResult run_pcg_herding(const EmbeddingCache& cache, const Eigen::VectorXd& x0, const SolverConfig& config,
                              const HerdingLmoOptions& lmo = {});

struct SbqResult {
  /// Nodes with unconstrained weights solving (G + ridge I) w = z.
  DiscreteMeasure measure;
  /// MMD^2 with optimal weights after n = 1, 2, ... selections.
  std::vector<double> mmd_by_nodes;
};

/// Sequential Bayesian quadrature: greedily adds the candidate that
/// minimises the MMD^2 after optimal reweighting. Throws SolverError when
/// the final Gram system cannot be factorised.
SbqResult run_sbq(const EmbeddingCache& cache, const Eigen::MatrixXd& candidates, const Eigen::VectorXd& candidate_z,
                  std::size_t n_nodes, double ridge = 1e-10);
/// Uses the cache's candidate pool.
SbqResult run_sbq(const EmbeddingCache& cache, std::size_t n_nodes, double ridge = 1e-10);

/// n i.i.d. draws from mu with weights 1/n.
DiscreteMeasure run_monte_carlo(const Measure& mu, std::size_t n, std::uint64_t seed);

}  // namespace bpcg

#endif
