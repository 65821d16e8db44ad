#include "bpcg/oracles/oracles.hpp"

#include "bpcg/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>

namespace bpcg::oracles {

Eigen::VectorXd simplex_projection_oracle(const Eigen::VectorXd& x0) {
  if (x0.size() == 0) throw ContractViolation("projection of an empty vector");
  std::vector<double> u(x0.data(), x0.data() + x0.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0, theta = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumulative += u[j];
    const double t = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  return (x0.array() - theta).cwiseMax(0.0).matrix();
}

double simplex_distance_optimum(const Eigen::VectorXd& x0) {
  return (simplex_projection_oracle(x0) - x0).squaredNorm();
}

std::vector<int> assignment_bruteforce(const Eigen::MatrixXd& cost) {
  const auto n = static_cast<int>(cost.rows());
  if (cost.cols() != n || n < 1 || n > 8) throw ContractViolation("brute-force assignment needs a square n <= 8 matrix");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    double c = 0.0;
    for (int i = 0; i < n; ++i) c += cost(i, perm[static_cast<std::size_t>(i)]);
    if (c < best_cost) {
      best_cost = c;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

EigenPair dense_min_eigenpair(const Eigen::MatrixXd& g) {
  const Eigen::Index n = g.rows();
  if (n == 0 || g.cols() != n) throw ContractViolation("eigenpair of a non-square matrix");
  Eigen::MatrixXd a = 0.5 * (g + g.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30 * std::max(1.0, a.squaredNorm())) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  Eigen::Index imin = 0;
  for (Eigen::Index i = 1; i < n; ++i)
    if (a(i, i) < a(imin, imin)) imin = i;
  return {a(imin, imin), v.col(imin)};
}

void golub_welsch(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  if (order < 1) throw ContractViolation("quadrature order must be positive");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int i = 1; i < order; ++i) {
    const double b = i / std::sqrt(4.0 * i * i - 1.0);
    jacobi(i, i - 1) = b;
    jacobi(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  nodes.resize(static_cast<std::size_t>(order));
  weights.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    nodes[static_cast<std::size_t>(i)] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    weights[static_cast<std::size_t>(i)] = 2.0 * v0 * v0;
  }
}

namespace {

struct Rule {
  std::vector<double> x, w;
};

Rule rule_on(int order, double lo, double hi) {
  static thread_local std::map<int, Rule> base;
  auto it = base.find(order);
  if (it == base.end()) {
    Rule fresh;
    golub_welsch(order, fresh.x, fresh.w);
    it = base.emplace(order, std::move(fresh)).first;
  }
  Rule r = it->second;
  const double h = 0.5 * (hi - lo), m = 0.5 * (hi + lo);
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    r.x[i] = m + h * r.x[i];
    r.w[i] *= h;
  }
  return r;
}

double kernel_of_r2(KernelKind kind, double r2) {
  const double r = std::sqrt(r2);
  switch (kind) {
    case KernelKind::Matern32: return (1.0 + r) * std::exp(-r);
    case KernelKind::Matern52: return (1.0 + r + r2 / 3.0) * std::exp(-r);
    case KernelKind::Gaussian: return std::exp(-r2);
  }
  return 0.0;
}

/// Density as a sum of coef * prod_j f_j(y_j).
struct SeparableTerm {
  double coef = 1.0;
  std::vector<std::function<double(double)>> factor;
};

std::vector<SeparableTerm> separable_density(const Measure& mu, int order) {
  const int d = mu.dimension();
  std::vector<SeparableTerm> terms;
  switch (mu.kind()) {
    case MeasureKind::UniformBox: {
      SeparableTerm t;
      t.factor.assign(static_cast<std::size_t>(d), [](double) { return 0.5; });
      terms.push_back(t);
      break;
    }
    case MeasureKind::TruncatedGaussian: {
      const Rule r = rule_on(order, -1.0, 1.0);
      double mass = 0.0;
      for (std::size_t i = 0; i < r.x.size(); ++i) mass += r.w[i] * std::exp(-r.x[i] * r.x[i]);
      SeparableTerm t;
      t.factor.assign(static_cast<std::size_t>(d), [mass](double y) { return std::exp(-y * y) / mass; });
      terms.push_back(t);
      break;
    }
    case MeasureKind::GaussianMixture: {
      const Rule r = rule_on(order, -1.0, 1.0);
      double total = 0.0;
      for (const auto& c : mu.components()) {
        SeparableTerm t;
        t.coef = c.weight;
        double box = 1.0;
        for (int j = 0; j < d; ++j) {
          const double center = c.center[j], s = c.bandwidth;
          auto f = [center, s](double y) {
            const double u = (y - center) / s;
            return std::exp(-0.5 * u * u) / (s * std::sqrt(2.0 * std::numbers::pi));
          };
          double m = 0.0;
          for (std::size_t i = 0; i < r.x.size(); ++i) m += r.w[i] * f(r.x[i]);
          box *= m;
          t.factor.push_back(f);
        }
        total += t.coef * box;
        terms.push_back(std::move(t));
      }
      for (auto& t : terms) t.coef /= total;
      break;
    }
  }
  return terms;
}

double density_1d(const std::vector<SeparableTerm>& terms, double y) {
  double s = 0.0;
  for (const auto& t : terms) s += t.coef * t.factor[0](y);
  return s;
}

/// Matern kernels in 1D: integral of K(|x - y|) rho(y) split at y = x.
double matern_z_1d(KernelKind kind, const std::vector<SeparableTerm>& terms, double x, int order) {
  double s = 0.0;
  for (const auto& [lo, hi] : {std::pair{-1.0, x}, std::pair{x, 1.0}}) {
    if (!(hi > lo)) continue;
    const Rule r = rule_on(order, lo, hi);
    for (std::size_t i = 0; i < r.x.size(); ++i)
      s += r.w[i] * density_1d(terms, r.x[i]) * kernel_of_r2(kind, (x - r.x[i]) * (x - r.x[i]));
  }
  return s;
}

void require_matern_support(const Measure& mu) {
  if (mu.dimension() > 2 || (mu.dimension() == 2 && mu.kind() != MeasureKind::UniformBox))
    throw ConfigError("the MMD oracle supports Matern kernels on the uniform box (d <= 2) or in one dimension");
}

}  // namespace

double embedding_oracle(const Kernel& k, const Measure& mu, const Eigen::VectorXd& x, int order) {
  const int d = mu.dimension();
  if (x.size() != d) throw ContractViolation("oracle point has the wrong dimension");
  const auto terms = separable_density(mu, order);
  if (k.kind() == KernelKind::Gaussian) {
    const Rule r = rule_on(order, -1.0, 1.0);
    double total = 0.0;
    for (const auto& t : terms) {
      double prod = t.coef;
      for (int j = 0; j < d; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < r.x.size(); ++i)
          s += r.w[i] * std::exp(-(x[j] - r.x[i]) * (x[j] - r.x[i])) * t.factor[static_cast<std::size_t>(j)](r.x[i]);
        prod *= s;
      }
      total += prod;
    }
    return total;
  }
  require_matern_support(mu);
  if (d == 1) return matern_z_1d(k.kind(), terms, x[0], order);
  // Uniform box in 2D: four panels meeting at x.
  double s = 0.0;
  for (const auto& [lo0, hi0] : {std::pair{-1.0, x[0]}, std::pair{x[0], 1.0}}) {
    if (!(hi0 > lo0)) continue;
    const Rule r0 = rule_on(order, lo0, hi0);
    for (const auto& [lo1, hi1] : {std::pair{-1.0, x[1]}, std::pair{x[1], 1.0}}) {
      if (!(hi1 > lo1)) continue;
      const Rule r1 = rule_on(order, lo1, hi1);
      for (std::size_t i = 0; i < r0.x.size(); ++i)
        for (std::size_t j = 0; j < r1.x.size(); ++j) {
          const double dx = x[0] - r0.x[i], dy = x[1] - r1.x[j];
          s += r0.w[i] * r1.w[j] * kernel_of_r2(k.kind(), dx * dx + dy * dy);
        }
    }
  }
  return 0.25 * s;
}

double embedding_constant_oracle(const Kernel& k, const Measure& mu, int order) {
  const int d = mu.dimension();
  const auto terms = separable_density(mu, order);
  if (k.kind() == KernelKind::Gaussian) {
    const Rule r = rule_on(order, -1.0, 1.0);
    double total = 0.0;
    for (const auto& a : terms)
      for (const auto& b : terms) {
        double prod = a.coef * b.coef;
        for (int j = 0; j < d; ++j) {
          const auto& fa = a.factor[static_cast<std::size_t>(j)];
          const auto& fb = b.factor[static_cast<std::size_t>(j)];
          double s = 0.0;
          for (std::size_t p = 0; p < r.x.size(); ++p)
            for (std::size_t q = 0; q < r.x.size(); ++q)
              s += r.w[p] * r.w[q] * std::exp(-(r.x[p] - r.x[q]) * (r.x[p] - r.x[q])) * fa(r.x[p]) * fb(r.x[q]);
          prod *= s;
        }
        total += prod;
      }
    return total;
  }
  require_matern_support(mu);
  if (d == 1) {
    const Rule r = rule_on(order, -1.0, 1.0);
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i)
      s += r.w[i] * density_1d(terms, r.x[i]) * matern_z_1d(k.kind(), terms, r.x[i], order);
    return s;
  }
  // Uniform box: the difference of two independent uniform points has
  // density prod_j (2 - |u_j|) / 4 on [-2, 2]^2; fold by symmetry.
  const Rule r = rule_on(order, 0.0, 2.0);
  double s = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i)
    for (std::size_t j = 0; j < r.x.size(); ++j)
      s += r.w[i] * r.w[j] * kernel_of_r2(k.kind(), r.x[i] * r.x[i] + r.x[j] * r.x[j]) * (2.0 - r.x[i]) *
           (2.0 - r.x[j]) / 16.0;
  return 4.0 * s;
}

double mmd_numeric_oracle(const Kernel& k, const Measure& mu, const DiscreteMeasure& xi, int order) {
  double total = embedding_constant_oracle(k, mu, order);
  for (std::size_t i = 0; i < xi.size(); ++i) {
    total -= 2.0 * xi.weights[i] * embedding_oracle(k, mu, xi.nodes[i], order);
    for (std::size_t j = 0; j < xi.size(); ++j)
      total += xi.weights[i] * xi.weights[j] * kernel_of_r2(k.kind(), (xi.nodes[i] - xi.nodes[j]).squaredNorm());
  }
  return total;
}

double lp_sphere_min_2d(const Eigen::Vector2d& c, double p, int samples) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double t = 2.0 * std::numbers::pi * i / samples;
    const double a = std::cos(t), b = std::sin(t);
    const double norm = std::pow(std::pow(std::abs(a), p) + std::pow(std::abs(b), p), 1.0 / p);
    best = std::min(best, (c[0] * a + c[1] * b) / norm);
  }
  return best;
}

}  // namespace bpcg::oracles
