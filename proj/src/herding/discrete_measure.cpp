#include "bpcg/herding/discrete_measure.hpp"

#include "bpcg/core/errors.hpp"
#include "bpcg/core/trace.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace bpcg {

DiscreteMeasure DiscreteMeasure::from_active_set(const ActiveSet& active) {
  DiscreteMeasure xi;
  for (std::size_t i = 0; i < active.size(); ++i) {
    xi.nodes.push_back(domain_point(active.atom(i)));
    xi.weights.push_back(active.weight(i));
  }
  return xi;
}

void DiscreteMeasure::require_probability() const {
  if (nodes.empty() || nodes.size() != weights.size())
    throw ContractViolation("discrete measure needs one weight per node");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ContractViolation("discrete measure weights must be non-negative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ContractViolation("discrete measure weights must sum to one");
}

namespace {

double assemble(const Kernel& k, const DiscreteMeasure& xi, const std::vector<double>& z, double c_mu) {
  if (xi.nodes.size() != xi.weights.size()) throw ContractViolation("discrete measure needs one weight per node");
  double quad = 0.0, lin = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    quad += xi.weights[i] * xi.weights[i];
    for (std::size_t j = i + 1; j < xi.size(); ++j) quad += 2.0 * xi.weights[i] * xi.weights[j] * k(xi.nodes[i], xi.nodes[j]);
    lin += xi.weights[i] * z[i];
  }
  return std::max(0.0, quad - 2.0 * lin + c_mu);
}

}  // namespace

double mmd_squared(const EmbeddingCache& cache, const DiscreteMeasure& xi) {
  std::vector<double> z;
  z.reserve(xi.size());
  for (const auto& x : xi.nodes) z.push_back(cache.z(x));
  return assemble(cache.kernel(), xi, z, cache.c_mu());
}

double mmd_squared(const Kernel& k, const Measure& mu, const DiscreteMeasure& xi, int order) {
  std::vector<double> z;
  z.reserve(xi.size());
  for (const auto& x : xi.nodes) z.push_back(mean_embedding(k, mu, x, order));
  return assemble(k, xi, z, embedding_constant(k, mu, order));
}

std::vector<double> equal_weight_prefix_mmd(const EmbeddingCache& cache, const std::vector<Eigen::VectorXd>& points) {
  std::vector<double> out;
  out.reserve(points.size());
  double gram_sum = 0.0, z_sum = 0.0;
  for (std::size_t n = 0; n < points.size(); ++n) {
    double cross = 0.0;
    for (std::size_t i = 0; i < n; ++i) cross += cache.kernel()(points[i], points[n]);
    gram_sum += 2.0 * cross + 1.0;
    z_sum += cache.z(points[n]);
    const double m = static_cast<double>(n + 1);
    out.push_back(std::max(0.0, gram_sum / (m * m) - 2.0 * z_sum / m + cache.c_mu()));
  }
  return out;
}

void write_quadrature_csv(std::ostream& out, const DiscreteMeasure& xi) {
  const int d = xi.dimension();
  for (int j = 0; j < d; ++j) out << "x_" << (j + 1) << ',';
  out << "weight\n";
  for (std::size_t i = 0; i < xi.size(); ++i) {
    for (int j = 0; j < d; ++j) out << format_double(xi.nodes[i][j]) << ',';
    out << format_double(xi.weights[i]) << '\n';
  }
}

}  // namespace bpcg
