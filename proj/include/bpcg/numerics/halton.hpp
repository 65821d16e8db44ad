#ifndef BPCG_NUMERICS_HALTON_HPP
#define BPCG_NUMERICS_HALTON_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace bpcg::numerics {

/// Van der Corput radical inverse of `index` in the given base.
double radical_inverse(std::uint64_t index, int base);

/// First `count` Halton points (indices 1..count, bases 2, 3, 5, ...) mapped
/// from the unit cube to [lo, hi]^dimension.
std::vector<Eigen::VectorXd> halton_points(std::size_t count, int dimension, double lo = 0.0, double hi = 1.0);

}  // namespace bpcg::numerics

#endif
