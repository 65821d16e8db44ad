#ifndef BPCG_LMO_ASSIGNMENT_HPP
#define BPCG_LMO_ASSIGNMENT_HPP

#include <Eigen/Dense>

#include <vector>

namespace bpcg {

/// Minimum-cost perfect assignment for a square cost matrix.
///
/// Shortest augmenting paths with row/column potentials (Hungarian /
/// Jonker-Volgenant family), O(n^3). Returns map with row i -> column map[i].
std::vector<int> solve_assignment(const Eigen::MatrixXd& cost);

}  // namespace bpcg

#endif
