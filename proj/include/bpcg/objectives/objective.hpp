#ifndef BPCG_OBJECTIVES_OBJECTIVE_HPP
#define BPCG_OBJECTIVES_OBJECTIVE_HPP

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace bpcg {

/// Smooth convex function on a flattened ambient space.
///
/// The public members check the argument dimension and forward to the
/// do_* hooks. `quadratic_coefficient(x, d)` returns <d, H d> when the
/// function is quadratic, so that
/// f(x - l d) = f(x) - l <grad f(x), d> + l^2/2 * quadratic_coefficient(x, d).
class Objective {
 public:
  virtual ~Objective() = default;

  virtual Eigen::Index dimension() const = 0;

  double value(const Eigen::VectorXd& x) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& x) const;
  std::optional<double> quadratic_coefficient(const Eigen::VectorXd& x, const Eigen::VectorXd& d) const;

  virtual std::optional<double> smoothness() const { return std::nullopt; }
  virtual std::optional<double> strong_convexity() const { return std::nullopt; }

 protected:
  virtual double do_value(const Eigen::VectorXd& x) const = 0;
  virtual Eigen::VectorXd do_gradient(const Eigen::VectorXd& x) const = 0;
  virtual std::optional<double> do_quadratic_coefficient(const Eigen::VectorXd&, const Eigen::VectorXd&) const {
    return std::nullopt;
  }

 private:
  void require_dimension(const Eigen::VectorXd& v) const;
};

inline double eval(const Objective& obj, const Eigen::VectorXd& x) { return obj.value(x); }
inline Eigen::VectorXd grad(const Objective& obj, const Eigen::VectorXd& x) { return obj.gradient(x); }

/// f(x) = |x - center|_2^2 (L = mu = 2).
class QuadraticDistance final : public Objective {
 public:
  explicit QuadraticDistance(Eigen::VectorXd center);

  Eigen::Index dimension() const override { return center_.size(); }
  std::optional<double> smoothness() const override { return 2.0; }
  std::optional<double> strong_convexity() const override { return 2.0; }
  const Eigen::VectorXd& center() const { return center_; }

 protected:
  double do_value(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd do_gradient(const Eigen::VectorXd& x) const override;
  std::optional<double> do_quadratic_coefficient(const Eigen::VectorXd& x, const Eigen::VectorXd& d) const override;

 private:
  Eigen::VectorXd center_;
};

/// One observed matrix entry (row, col) with its target value.
struct ObservedEntry {
  int row = 0;
  int col = 0;
  double target = 0.0;
};

/// f(X) = sum over observed (i, j) of (X_ij - T_ij)^2 for an n x n matrix X
/// stored column-major. Duplicate (i, j) pairs are rejected.
class MatrixCompletionLoss final : public Objective {
 public:
  MatrixCompletionLoss(int n, std::vector<ObservedEntry> entries);

  Eigen::Index dimension() const override { return static_cast<Eigen::Index>(n_) * n_; }
  std::optional<double> smoothness() const override { return 2.0; }
  std::optional<double> strong_convexity() const override;
  int size() const { return n_; }
  const std::vector<ObservedEntry>& entries() const { return entries_; }

 protected:
  double do_value(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd do_gradient(const Eigen::VectorXd& x) const override;
  std::optional<double> do_quadratic_coefficient(const Eigen::VectorXd& x, const Eigen::VectorXd& d) const override;

 private:
  Eigen::Index flat(const ObservedEntry& e) const { return e.row + static_cast<Eigen::Index>(e.col) * n_; }

  int n_;
  std::vector<ObservedEntry> entries_;
};

}  // namespace bpcg

#endif
