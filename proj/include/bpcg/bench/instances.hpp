#ifndef BPCG_BENCH_INSTANCES_HPP
#define BPCG_BENCH_INSTANCES_HPP

#include "bpcg/core/atom.hpp"
#include "bpcg/lmo/lmo.hpp"
#include "bpcg/objectives/objective.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bpcg::bench {

/// A finite-dimensional benchmark problem: objective, LMO and start vertex.
struct VectorInstance {
  std::string label;
  std::unique_ptr<Objective> objective;
  std::unique_ptr<LinearMinimizationOracle> lmo;
  Atom start;
  /// Optimal value when known by construction.
  std::optional<double> f_star;
};

/// |x - x0|^2 over the simplex with x0 drawn uniformly from its interior
/// (so f* = 0).
VectorInstance make_simplex_instance(int n, std::uint64_t seed);

/// |X - X0|^2 over the Birkhoff polytope with X0 a random convex
/// combination of n permutation matrices (so f* = 0).
VectorInstance make_birkhoff_instance(int n, std::uint64_t seed);

/// |x - x0|^2 over the unit l_p ball with |x0|_p = 0.9 (so f* = 0).
VectorInstance make_lp_ball_instance(int n, double p, std::uint64_t seed);

/// Matrix completion loss over the spectrahedron.
VectorInstance make_matrix_completion_instance(int n, std::vector<ObservedEntry> entries,
                                               std::optional<double> f_star);

/// Observed entries of a symmetric matrix together with the ground truth.
struct LowRankData {
  int n = 0;
  std::vector<ObservedEntry> entries;
  Eigen::MatrixXd ground_truth;
};

/// Random rank-r PSD matrix with unit trace; each unordered pair {i, j} is
/// observed with probability `observed_fraction` (both (i, j) and (j, i)),
/// with i.i.d. N(0, noise^2) perturbations shared by the symmetric pair.
LowRankData synthetic_lowrank(int n, int rank, double noise, std::uint64_t seed, double observed_fraction = 0.3);

/// The start vertex used by every benchmark: the LMO answer at the gradient
/// of the zero point.
Atom default_start(const Objective& objective, const LinearMinimizationOracle& lmo);

}  // namespace bpcg::bench

#endif
