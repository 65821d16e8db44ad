#ifndef BPCG_HERDING_KERNEL_HPP
#define BPCG_HERDING_KERNEL_HPP

#include "bpcg/herding/kernel_kind.hpp"

#include <Eigen/Dense>

namespace bpcg {

/// Radial kernel on R^d with K(x, x) = 1 and K >= 0.
///
/// Matern(3/2): (1 + r) e^{-r}, Matern(5/2): (1 + r + r^2/3) e^{-r}, with the
/// length scale chosen so that the argument is r = |x - y|_2. Gaussian:
/// e^{-r^2}.
class Kernel {
 public:
  explicit Kernel(KernelKind kind) : kind_(kind) {}

  KernelKind kind() const { return kind_; }
  double of_distance(double r) const;
  double operator()(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

 private:
  KernelKind kind_;
};

inline double kernel_eval(const Kernel& k, const Eigen::VectorXd& x, const Eigen::VectorXd& y) { return k(x, y); }

}  // namespace bpcg

#endif
