#include "bpcg/herding/herding_lmo.hpp"

#include "bpcg/core/errors.hpp"
#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>

namespace bpcg {

double herding_witness(const EmbeddingCache& cache, const DiscreteMeasure& xi, const Eigen::VectorXd& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) s += xi.weights[i] * cache.kernel()(xi.nodes[i], x);
  return s - cache.z(x);
}

HerdingLmoResult herding_lmo(const EmbeddingCache& cache, const DiscreteMeasure& xi, const HerdingLmoOptions& options) {
  Eigen::VectorXd pool_g = -cache.pool_z();
  for (std::size_t i = 0; i < xi.size(); ++i) pool_g += xi.weights[i] * cache.pool_column(xi.nodes[i]);
  std::vector<double> node_g;
  node_g.reserve(xi.size());
  for (const auto& x : xi.nodes) node_g.push_back(herding_witness(cache, xi, x));
  return herding_lmo(cache, xi, pool_g, node_g, options);
}

HerdingLmoResult herding_lmo(const EmbeddingCache& cache, const DiscreteMeasure& xi, const Eigen::VectorXd& pool_g,
                             std::span<const double> node_g, const HerdingLmoOptions& options) {
  if (node_g.size() != xi.size() || pool_g.size() != cache.pool().cols())
    throw ContractViolation("herding LMO inputs do not match the pool and the nodes");
  if (xi.size() == 0 && pool_g.size() == 0) throw ContractViolation("herding LMO has no candidates");
  const int d = cache.dimension();

  // Nodes are scanned first so that exact ties resolve to an existing node.
  HerdingLmoResult best;
  bool have = false;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (!have || node_g[i] < best.g) {
      best.point = xi.nodes[i];
      best.g = node_g[i];
      best.node = i;
      have = true;
    }
  }
  for (Eigen::Index j = 0; j < pool_g.size(); ++j) {
    if (!have || pool_g[j] < best.g) {
      best.point = cache.pool().col(j);
      best.g = pool_g[j];
      best.node.reset();
      have = true;
    }
  }
  best.candidate_g = best.g;

  const double spacing = 2.0 / std::pow(static_cast<double>(std::max<Eigen::Index>(pool_g.size(), 1)), 1.0 / d);
  const double half_width = std::min(1.0, 2.0 * spacing);
  Eigen::VectorXd x = best.point;
  double gx = best.g;
  bool moved = false;
  for (int sweep = 0; sweep < options.sweeps; ++sweep) {
    const double g_before = gx;
    bool improved = false;
    for (int j = 0; j < d; ++j) {
      const double lo = std::max(-1.0, x[j] - half_width);
      const double hi = std::min(1.0, x[j] + half_width);
      Eigen::VectorXd trial = x;
      const auto phi = [&](double t) {
        trial[j] = t;
        return herding_witness(cache, xi, trial);
      };
      std::uintmax_t iters = 200;
      const auto [t, value] = boost::math::tools::brent_find_minima(phi, lo, hi, options.brent_bits, iters);
      if (value < gx) {
        x[j] = t;
        gx = value;
        improved = true;
        moved = true;
      }
    }
    if (!improved || g_before - gx <= options.sweep_improvement) break;
  }
  if (moved) {
    best.point = x;
    best.g = gx;
    best.node.reset();
    for (std::size_t i = 0; i < xi.size(); ++i) {
      if ((xi.nodes[i] - x).lpNorm<Eigen::Infinity>() <= options.snap_tolerance && node_g[i] <= best.candidate_g) {
        best.point = xi.nodes[i];
        best.g = node_g[i];
        best.node = i;
        break;
      }
    }
  }
  best.z = cache.z(best.point);
  return best;
}

}  // namespace bpcg
