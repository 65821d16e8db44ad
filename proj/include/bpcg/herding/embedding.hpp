#ifndef BPCG_HERDING_EMBEDDING_HPP
#define BPCG_HERDING_EMBEDDING_HPP

#include "bpcg/herding/kernel.hpp"
#include "bpcg/herding/measure.hpp"

#include <Eigen/Dense>

#include <vector>

namespace bpcg {

struct EmbeddingOptions {
  /// Gauss-Legendre order per dimension for z(x).
  int order = 64;
  /// Order per dimension of the outer rule for c_mu; 0 picks `order` for
  /// d <= 2 and kReducedOuterOrder for d = 3.
  int outer_order = 0;
  /// Halton candidate pool for the continuous LMO (0 disables it).
  std::size_t pool_size = 4096;

  static constexpr int kReducedOuterOrder = 12;
};

/// z(x) = int K(x, y) dmu(y) by tensor Gauss-Legendre quadrature with the
/// density folded into the weights. In one dimension the interval is split
/// at x so that the kernel kink at y = x falls on a panel boundary.
/// Throws ConfigError for d > 3.
double mean_embedding(const Kernel& k, const Measure& mu, const Eigen::VectorXd& x, int order = 64);

/// c_mu = int int K dmu dmu as an outer quadrature over z.
double embedding_constant(const Kernel& k, const Measure& mu, int order = 64, int outer_order = 0);

/// Kernel, measure, z(.), c_mu and a fixed candidate pool with its z values.
/// Immutable after construction.
class EmbeddingCache {
 public:
  EmbeddingCache(Kernel kernel, Measure measure, EmbeddingOptions options = {});

  const Kernel& kernel() const { return kernel_; }
  const Measure& measure() const { return measure_; }
  int dimension() const { return measure_.dimension(); }
  const EmbeddingOptions& options() const { return options_; }

  double z(const Eigen::VectorXd& x) const;
  double c_mu() const { return c_mu_; }

  /// Candidate pool: Halton points on [-1, 1]^d, one per column.
  const Eigen::MatrixXd& pool() const { return pool_; }
  const Eigen::VectorXd& pool_z() const { return pool_z_; }
  /// (K(x, p_j))_j over the pool.
  Eigen::VectorXd pool_column(const Eigen::VectorXd& x) const;

 private:
  Kernel kernel_;
  Measure measure_;
  EmbeddingOptions options_;
  // Tensor rule with density folded in (unused for d = 1, which splits at x).
  Eigen::MatrixXd nodes_;
  Eigen::VectorXd weights_;
  double c_mu_ = 0.0;
  Eigen::MatrixXd pool_;
  Eigen::MatrixXd pool_by_row_;
  Eigen::VectorXd pool_z_;
};

}  // namespace bpcg

#endif
