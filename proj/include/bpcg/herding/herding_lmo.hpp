#ifndef BPCG_HERDING_HERDING_LMO_HPP
#define BPCG_HERDING_HERDING_LMO_HPP

#include "bpcg/herding/discrete_measure.hpp"
#include "bpcg/herding/embedding.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>

namespace bpcg {

struct HerdingLmoOptions {
  int sweeps = 5;
  /// Bits of precision requested from Brent's method per coordinate line.
  int brent_bits = 30;
  /// Sweeping stops early once a full sweep lowers g by no more than this.
  double sweep_improvement = 1e-13;
  /// Refined points this close (infinity norm) to a node are merged with it.
  double snap_tolerance = 1e-10;
};

struct HerdingLmoResult {
  Eigen::VectorXd point;
  double g = 0.0;             ///< g(point) = sum_i w_i K(x_i, point) - z(point)
  double z = 0.0;             ///< z(point)
  double candidate_g = 0.0;   ///< best g over pool and nodes before refinement
  std::optional<std::size_t> node;  ///< index into xi.nodes when the result is a node
};

/// g(x) = sum_i w_i K(x_i, x) - z(x), half the gradient pairing <grad F(xi), delta_x>.
double herding_witness(const EmbeddingCache& cache, const DiscreteMeasure& xi, const Eigen::VectorXd& x);

/// Approximate argmin of g over the box: best point of the candidate pool
/// and the current nodes, then `sweeps` rounds of per-coordinate
/// Brent search in a window around the incumbent.
/// g(result) <= candidate_g always holds.
HerdingLmoResult herding_lmo(const EmbeddingCache& cache, const DiscreteMeasure& xi,
                             const HerdingLmoOptions& options = {});

/// Same, with g already evaluated on the pool and on the nodes.
HerdingLmoResult herding_lmo(const EmbeddingCache& cache, const DiscreteMeasure& xi, const Eigen::VectorXd& pool_g,
                             std::span<const double> node_g, const HerdingLmoOptions& options = {});

}  // namespace bpcg

#endif
