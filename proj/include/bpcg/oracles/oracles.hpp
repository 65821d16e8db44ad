#ifndef BPCG_ORACLES_ORACLES_HPP
#define BPCG_ORACLES_ORACLES_HPP

#include "bpcg/herding/discrete_measure.hpp"
#include "bpcg/herding/kernel.hpp"
#include "bpcg/herding/measure.hpp"

#include <Eigen/Dense>

#include <vector>

// Brute-force references used to certify the production code. None of these
// call into the LMOs, solvers or embedding quadrature they are compared with.

namespace bpcg::oracles {

/// Euclidean projection onto the probability simplex (sort and threshold).
Eigen::VectorXd simplex_projection_oracle(const Eigen::VectorXd& x0);

/// min over the simplex of |x - x0|^2.
double simplex_distance_optimum(const Eigen::VectorXd& x0);

/// Exhaustive minimum over all n! permutations (n <= 8); map[row] = col.
std::vector<int> assignment_bruteforce(const Eigen::MatrixXd& cost);

struct EigenPair {
  double value = 0.0;
  Eigen::VectorXd vector;
};

/// Smallest eigenpair of a symmetric matrix by cyclic Jacobi rotations.
EigenPair dense_min_eigenpair(const Eigen::MatrixXd& g);

/// Gauss-Legendre rule by the Golub-Welsch eigenvalue method.
void golub_welsch(int order, std::vector<double>& nodes, std::vector<double>& weights);

/// MMD^2 with z and c_mu from order-`order` Golub-Welsch quadrature. The
/// Gaussian kernel is handled through its product structure for every
/// measure; Matern kernels are supported for the uniform box (c_mu through
/// the autocorrelation of the box) and, in one dimension, for any measure.
/// Throws ConfigError otherwise.
double mmd_numeric_oracle(const Kernel& k, const Measure& mu, const DiscreteMeasure& xi, int order = 256);

/// The two ingredients of mmd_numeric_oracle.
double embedding_oracle(const Kernel& k, const Measure& mu, const Eigen::VectorXd& x, int order = 256);
double embedding_constant_oracle(const Kernel& k, const Measure& mu, int order = 256);

/// Minimum of <c, v> over a dense sample of the l_p unit sphere in 2D.
double lp_sphere_min_2d(const Eigen::Vector2d& c, double p, int samples = 1000000);

}  // namespace bpcg::oracles

#endif
