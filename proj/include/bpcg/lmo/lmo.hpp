#ifndef BPCG_LMO_LMO_HPP
#define BPCG_LMO_LMO_HPP

#include "bpcg/core/atom.hpp"
#include "bpcg/core/errors.hpp"

#include <Eigen/Dense>

#include <optional>

namespace bpcg {

/// Access to a compact convex region P = conv(V(P)) through
/// argmin_{v in V(P)} <c, v>.
class LinearMinimizationOracle {
 public:
  virtual ~LinearMinimizationOracle() = default;

  /// Length of the flattened ambient vectors the oracle accepts.
  virtual Eigen::Index dimension() const = 0;
  virtual Atom minimize(const Eigen::VectorXd& direction) const = 0;
  /// Euclidean (Frobenius for matrices) diameter of P.
  virtual double diameter() const = 0;

  /// Pyramidal width, when the caller knows it. Never computed here.
  std::optional<double> pyramidal_width() const { return pyramidal_width_; }
  void set_pyramidal_width(double delta) { pyramidal_width_ = delta; }

 private:
  std::optional<double> pyramidal_width_;
};

/// e_i with i the first index attaining min_j c_j.
Atom simplex_lmo(const Eigen::VectorXd& c);

/// Permutation minimising sum_i C(i, sigma(i)).
Atom birkhoff_lmo(const Eigen::MatrixXd& cost);

/// Boundary point of the unit l_p ball minimising <c, v>; throws
/// ContractViolation for c = 0.
Atom lp_ball_lmo(const Eigen::VectorXd& c, double p);

struct PowerIterationOptions {
  double relative_residual = 1e-8;
  int max_iterations = 100000;
};

/// Raised when the shifted power iteration hits its cap.
class PowerIterationError : public SolverError {
 public:
  PowerIterationError(double residual, int iterations);
  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

/// Unit vector u for the smallest eigenvalue of the symmetric matrix G, so
/// that u u^T minimises <G, X> over the spectrahedron.
///
/// Power iteration on |G|_F I - G from e_1, stopped once
/// |G u - (u^T G u) u|_2 <= relative_residual * |G|_F. When e_1 is already
/// an eigenvector a second start with all components non-zero is tried and
/// the lower Rayleigh quotient wins (e_1 on ties). The sign is fixed so the
/// largest-magnitude component is positive.
Atom spectrahedron_lmo(const Eigen::MatrixXd& g, const PowerIterationOptions& options = {});

class SimplexLmo final : public LinearMinimizationOracle {
 public:
  explicit SimplexLmo(Eigen::Index n);
  Eigen::Index dimension() const override { return n_; }
  Atom minimize(const Eigen::VectorXd& direction) const override;
  double diameter() const override;

 private:
  Eigen::Index n_;
};

/// Doubly stochastic n x n matrices, flattened column-major.
class BirkhoffLmo final : public LinearMinimizationOracle {
 public:
  explicit BirkhoffLmo(int n);
  Eigen::Index dimension() const override { return static_cast<Eigen::Index>(n_) * n_; }
  Atom minimize(const Eigen::VectorXd& direction) const override;
  double diameter() const override;
  int size() const { return n_; }

 private:
  int n_;
};

class LpBallLmo final : public LinearMinimizationOracle {
 public:
  LpBallLmo(Eigen::Index n, double p);
  Eigen::Index dimension() const override { return n_; }
  Atom minimize(const Eigen::VectorXd& direction) const override;
  double diameter() const override;
  double p() const { return p_; }

 private:
  Eigen::Index n_;
  double p_;
};

/// {X psd, Tr X = 1}. The direction is symmetrised before the eigen-solve,
/// which leaves <G, X> unchanged for symmetric X.
class SpectrahedronLmo final : public LinearMinimizationOracle {
 public:
  explicit SpectrahedronLmo(int n, PowerIterationOptions options = {});
  Eigen::Index dimension() const override { return static_cast<Eigen::Index>(n_) * n_; }
  Atom minimize(const Eigen::VectorXd& direction) const override;
  double diameter() const override;

 private:
  int n_;
  PowerIterationOptions options_;
};

}  // namespace bpcg

#endif
