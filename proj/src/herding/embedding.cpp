#include "bpcg/herding/embedding.hpp"

#include "bpcg/core/errors.hpp"
#include "bpcg/numerics/halton.hpp"
#include "bpcg/numerics/quadrature.hpp"

#include "kernel_sum.hpp"

#include <cmath>
#include <functional>

namespace bpcg {

namespace {

void require_supported(const Measure& mu) {
  if (mu.dimension() > 3) throw ConfigError("mean embeddings are supported for d <= 3 only");
}

/// Tensor rule on [-1, 1]^d with the density of mu folded into the weights.
/// Nodes are returned one per row.
void tensor_rule(const Measure& mu, int order, Eigen::MatrixXd& nodes, Eigen::VectorXd& weights) {
  const int d = mu.dimension();
  const auto rule = numerics::gauss_legendre(order);
  Eigen::Index count = 1;
  for (int j = 0; j < d; ++j) count *= order;
  nodes.resize(count, d);
  weights.resize(count);
  Eigen::VectorXd y(d);
  for (Eigen::Index idx = 0; idx < count; ++idx) {
    Eigen::Index rest = idx;
    double w = 1.0;
    for (int j = 0; j < d; ++j) {
      const auto k = static_cast<std::size_t>(rest % order);
      rest /= order;
      y[j] = rule.nodes[k];
      w *= rule.weights[k];
    }
    nodes.row(idx) = y.transpose();
    weights[idx] = w * mu.density(y);
  }
}

double split_1d(const Kernel& k, const Measure& mu, double x, int order) {
  double sum = 0.0;
  Eigen::VectorXd y(1);
  for (const auto& [lo, hi] : {std::pair{-1.0, x}, std::pair{x, 1.0}}) {
    if (!(hi > lo)) continue;
    const auto rule = numerics::gauss_legendre(order, lo, hi);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      y[0] = rule.nodes[i];
      sum += rule.weights[i] * mu.density(y) * k.of_distance(std::abs(x - y[0]));
    }
  }
  return sum;
}

double tensor_sum(const Kernel& k, const Eigen::MatrixXd& nodes, const Eigen::VectorXd& weights,
                  const Eigen::VectorXd& x) {
  return detail::kernel_sum(k.kind(), nodes.data(), weights.data(), static_cast<std::size_t>(nodes.rows()),
                            static_cast<int>(nodes.cols()), x.data());
}

int resolve_outer(int d, int order, int outer_order) {
  if (outer_order > 0) return outer_order;
  return d <= 2 ? order : EmbeddingOptions::kReducedOuterOrder;
}

double outer_integral(const Measure& mu, int outer, const std::function<double(const Eigen::VectorXd&)>& z) {
  Eigen::MatrixXd nodes;
  Eigen::VectorXd weights;
  tensor_rule(mu, outer, nodes, weights);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < nodes.rows(); ++i)
    if (weights[i] != 0.0) sum += weights[i] * z(nodes.row(i).transpose());
  return sum;
}

}  // namespace

double mean_embedding(const Kernel& k, const Measure& mu, const Eigen::VectorXd& x, int order) {
  require_supported(mu);
  if (x.size() != mu.dimension()) throw ContractViolation("embedding argument has the wrong dimension");
  if (mu.dimension() == 1) return split_1d(k, mu, x[0], order);
  Eigen::MatrixXd nodes;
  Eigen::VectorXd weights;
  tensor_rule(mu, order, nodes, weights);
  return tensor_sum(k, nodes, weights, x);
}

double embedding_constant(const Kernel& k, const Measure& mu, int order, int outer_order) {
  require_supported(mu);
  const int d = mu.dimension();
  const int outer = resolve_outer(d, order, outer_order);
  if (d == 1) return outer_integral(mu, outer, [&](const Eigen::VectorXd& x) { return split_1d(k, mu, x[0], order); });
  Eigen::MatrixXd nodes;
  Eigen::VectorXd weights;
  tensor_rule(mu, order, nodes, weights);
  return outer_integral(mu, outer, [&](const Eigen::VectorXd& x) { return tensor_sum(k, nodes, weights, x); });
}

EmbeddingCache::EmbeddingCache(Kernel kernel, Measure measure, EmbeddingOptions options)
    : kernel_(kernel), measure_(std::move(measure)), options_(options) {
  require_supported(measure_);
  if (options_.order < 2) throw ConfigError("quadrature order must be at least 2");
  const int d = measure_.dimension();
  if (d > 1) tensor_rule(measure_, options_.order, nodes_, weights_);
  c_mu_ = outer_integral(measure_, resolve_outer(d, options_.order, options_.outer_order),
                         [this](const Eigen::VectorXd& x) { return z(x); });
  const auto points = numerics::halton_points(options_.pool_size, d, -1.0, 1.0);
  pool_.resize(d, static_cast<Eigen::Index>(points.size()));
  pool_z_.resize(static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    pool_.col(static_cast<Eigen::Index>(i)) = points[i];
    pool_z_[static_cast<Eigen::Index>(i)] = z(points[i]);
  }
  pool_by_row_ = pool_.transpose();
}

double EmbeddingCache::z(const Eigen::VectorXd& x) const {
  if (x.size() != dimension()) throw ContractViolation("embedding argument has the wrong dimension");
  if (dimension() == 1) return split_1d(kernel_, measure_, x[0], options_.order);
  return tensor_sum(kernel_, nodes_, weights_, x);
}

Eigen::VectorXd EmbeddingCache::pool_column(const Eigen::VectorXd& x) const {
  if (x.size() != dimension()) throw ContractViolation("pool column argument has the wrong dimension");
  Eigen::VectorXd col(pool_by_row_.rows());
  detail::kernel_column(kernel_.kind(), pool_by_row_.data(), static_cast<std::size_t>(pool_by_row_.rows()),
                        dimension(), x.data(), col.data());
  return col;
}

}  // namespace bpcg
