#ifndef BPCG_HERDING_MEASURE_HPP
#define BPCG_HERDING_MEASURE_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace bpcg {

enum class MeasureKind { UniformBox, TruncatedGaussian, GaussianMixture };

std::string_view to_string(MeasureKind kind);

/// Isotropic Gaussian bump of a mixture, before truncation to the box.
struct MixtureComponent {
  double weight = 1.0;
  Eigen::VectorXd center;
  double bandwidth = 1.0;  ///< standard deviation per coordinate
};

/// Probability measure on the box [-1, 1]^d with a density w.r.t. Lebesgue
/// measure.
class Measure {
 public:
  static Measure uniform_box(int dimension);
  /// Density exp(-|x|^2) / (sqrt(pi) erf(1))^d.
  static Measure truncated_gaussian(int dimension);
  /// Mixture restricted to the box and renormalised as a whole.
  static Measure gaussian_mixture(int dimension, std::vector<MixtureComponent> components);
  /// Three components, weights (0.5, 0.3, 0.2), bandwidth 0.3, centers drawn
  /// uniformly from [-0.7, 0.7]^d with the given seed.
  static Measure default_mixture(int dimension, std::uint64_t seed = 2022);

  MeasureKind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  const std::vector<MixtureComponent>& components() const { return components_; }
  /// Normalising constant of the mixture on the box (1 for other kinds).
  double mixture_mass() const { return mixture_mass_; }

  double density(const Eigen::VectorXd& x) const;
  /// An upper bound on the density over the box.
  double density_bound() const;
  /// Invariant under x -> -x.
  bool is_symmetric() const { return kind_ != MeasureKind::GaussianMixture; }

  /// One draw by rejection from the uniform proposal on the box.
  Eigen::VectorXd sample(std::mt19937_64& rng) const;

 private:
  Measure(MeasureKind kind, int dimension);

  MeasureKind kind_;
  int dimension_;
  std::vector<MixtureComponent> components_;
  double mixture_mass_ = 1.0;
  double truncated_gaussian_norm_ = 1.0;
};

}  // namespace bpcg

#endif
