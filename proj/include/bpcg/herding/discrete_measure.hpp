#ifndef BPCG_HERDING_DISCRETE_MEASURE_HPP
#define BPCG_HERDING_DISCRETE_MEASURE_HPP

#include "bpcg/core/active_set.hpp"
#include "bpcg/herding/embedding.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <vector>

namespace bpcg {

/// Quadrature rule sum_i w_i delta_{x_i}. Herding produces probability
/// weights; SBQ weights are unconstrained.
struct DiscreteMeasure {
  std::vector<Eigen::VectorXd> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  int dimension() const { return nodes.empty() ? 0 : static_cast<int>(nodes.front().size()); }

  /// Nodes and weights of an active set of domain points.
  static DiscreteMeasure from_active_set(const ActiveSet& active);
  /// Throws ContractViolation unless weights are non-negative and sum to 1
  /// within 1e-12.
  void require_probability() const;
};

/// sum_ij w_i w_j K(x_i, x_j) - 2 sum_i w_i z(x_i) + c_mu, clamped at 0.
double mmd_squared(const EmbeddingCache& cache, const DiscreteMeasure& xi);

/// Same, building z and c_mu on the fly at the given quadrature order.
double mmd_squared(const Kernel& k, const Measure& mu, const DiscreteMeasure& xi, int order = 64);

/// MMD^2 of the equal-weight prefixes {x_1..x_n}, n = 1..N, in O(N^2).
std::vector<double> equal_weight_prefix_mmd(const EmbeddingCache& cache, const std::vector<Eigen::VectorXd>& points);

/// One row per node: x_1, ..., x_d, weight.
void write_quadrature_csv(std::ostream& out, const DiscreteMeasure& xi);

}  // namespace bpcg

#endif
