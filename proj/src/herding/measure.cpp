#include "bpcg/herding/measure.hpp"

#include "bpcg/core/errors.hpp"

#include <cmath>
#include <numbers>

namespace bpcg {

namespace {

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::numbers::sqrt2); }

}  // namespace

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::UniformBox: return "uniform";
    case MeasureKind::TruncatedGaussian: return "truncated-gaussian";
    case MeasureKind::GaussianMixture: return "mixture";
  }
  return "?";
}

Measure::Measure(MeasureKind kind, int dimension) : kind_(kind), dimension_(dimension) {
  if (dimension_ < 1) throw ConfigError("measure dimension must be positive");
}

Measure Measure::uniform_box(int dimension) { return Measure(MeasureKind::UniformBox, dimension); }

Measure Measure::truncated_gaussian(int dimension) {
  Measure m(MeasureKind::TruncatedGaussian, dimension);
  m.truncated_gaussian_norm_ = std::pow(std::sqrt(std::numbers::pi) * std::erf(1.0), dimension);
  return m;
}

Measure Measure::gaussian_mixture(int dimension, std::vector<MixtureComponent> components) {
  Measure m(MeasureKind::GaussianMixture, dimension);
  if (components.empty()) throw ConfigError("mixture needs at least one component");
  double total_weight = 0.0;
  for (const auto& c : components) {
    if (c.center.size() != dimension) throw ConfigError("mixture center has the wrong dimension");
    if (!(c.weight > 0.0) || !(c.bandwidth > 0.0)) throw ConfigError("mixture weights and bandwidths must be positive");
    total_weight += c.weight;
  }
  for (auto& c : components) c.weight /= total_weight;
  double mass = 0.0;
  for (const auto& c : components) {
    double box = 1.0;
    for (int j = 0; j < dimension; ++j)
      box *= normal_cdf((1.0 - c.center[j]) / c.bandwidth) - normal_cdf((-1.0 - c.center[j]) / c.bandwidth);
    mass += c.weight * box;
  }
  m.components_ = std::move(components);
  m.mixture_mass_ = mass;
  return m;
}

Measure Measure::default_mixture(int dimension, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-0.7, 0.7);
  const double weights[3] = {0.5, 0.3, 0.2};
  std::vector<MixtureComponent> comps;
  for (double w : weights) {
    Eigen::VectorXd c(dimension);
    for (int j = 0; j < dimension; ++j) c[j] = unif(rng);
    comps.push_back({w, std::move(c), 0.3});
  }
  return gaussian_mixture(dimension, std::move(comps));
}

double Measure::density(const Eigen::VectorXd& x) const {
  if (x.size() != dimension_) throw ContractViolation("density argument has the wrong dimension");
  if (x.lpNorm<Eigen::Infinity>() > 1.0) return 0.0;
  switch (kind_) {
    case MeasureKind::UniformBox: return std::ldexp(1.0, -dimension_);
    case MeasureKind::TruncatedGaussian: return std::exp(-x.squaredNorm()) / truncated_gaussian_norm_;
    case MeasureKind::GaussianMixture: {
      double sum = 0.0;
      for (const auto& c : components_) {
        const double s2 = c.bandwidth * c.bandwidth;
        sum += c.weight * std::exp(-(x - c.center).squaredNorm() / (2.0 * s2)) /
               std::pow(2.0 * std::numbers::pi * s2, 0.5 * dimension_);
      }
      return sum / mixture_mass_;
    }
  }
  return 0.0;
}

double Measure::density_bound() const {
  switch (kind_) {
    case MeasureKind::UniformBox: return std::ldexp(1.0, -dimension_);
    case MeasureKind::TruncatedGaussian: return 1.0 / truncated_gaussian_norm_;
    case MeasureKind::GaussianMixture: {
      double sum = 0.0;
      for (const auto& c : components_)
        sum += c.weight / std::pow(2.0 * std::numbers::pi * c.bandwidth * c.bandwidth, 0.5 * dimension_);
      return sum / mixture_mass_;
    }
  }
  return 1.0;
}

Eigen::VectorXd Measure::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double bound = density_bound();
  Eigen::VectorXd x(dimension_);
  while (true) {
    for (int j = 0; j < dimension_; ++j) x[j] = box(rng);
    if (kind_ == MeasureKind::UniformBox || unit(rng) * bound <= density(x)) return x;
  }
}

}  // namespace bpcg
