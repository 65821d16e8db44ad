#include "bpcg/numerics/halton.hpp"

#include "bpcg/core/errors.hpp"

#include <array>

namespace bpcg::numerics {

double radical_inverse(std::uint64_t index, int base) {
  const double inv_base = 1.0 / base;
  double scale = inv_base;
  double result = 0.0;
  while (index > 0) {
    result += static_cast<double>(index % base) * scale;
    index /= base;
    scale *= inv_base;
  }
  return result;
}

std::vector<Eigen::VectorXd> halton_points(std::size_t count, int dimension, double lo, double hi) {
  static constexpr std::array<int, 8> kPrimes{2, 3, 5, 7, 11, 13, 17, 19};
  if (dimension < 1 || dimension > static_cast<int>(kPrimes.size()))
    throw ConfigError("Halton sequence supports dimensions 1..8");
  std::vector<Eigen::VectorXd> points;
  points.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    Eigen::VectorXd p(dimension);
    for (int k = 0; k < dimension; ++k) p[k] = lo + (hi - lo) * radical_inverse(i, kPrimes[k]);
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace bpcg::numerics
