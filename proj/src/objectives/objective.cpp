#include "bpcg/objectives/objective.hpp"

#include "bpcg/core/errors.hpp"

#include <cmath>
#include <set>
#include <string>
#include <utility>

namespace bpcg {

void Objective::require_dimension(const Eigen::VectorXd& v) const {
  if (v.size() != dimension())
    throw ContractViolation("objective expects dimension " + std::to_string(dimension()) + ", got " +
                            std::to_string(v.size()));
}

double Objective::value(const Eigen::VectorXd& x) const {
  require_dimension(x);
  return do_value(x);
}

Eigen::VectorXd Objective::gradient(const Eigen::VectorXd& x) const {
  require_dimension(x);
  return do_gradient(x);
}

std::optional<double> Objective::quadratic_coefficient(const Eigen::VectorXd& x, const Eigen::VectorXd& d) const {
  require_dimension(x);
  require_dimension(d);
  return do_quadratic_coefficient(x, d);
}

QuadraticDistance::QuadraticDistance(Eigen::VectorXd center) : center_(std::move(center)) {
  if (center_.size() == 0 || !center_.allFinite()) throw ContractViolation("quadratic distance needs a finite center");
}

double QuadraticDistance::do_value(const Eigen::VectorXd& x) const { return (x - center_).squaredNorm(); }

Eigen::VectorXd QuadraticDistance::do_gradient(const Eigen::VectorXd& x) const { return 2.0 * (x - center_); }

std::optional<double> QuadraticDistance::do_quadratic_coefficient(const Eigen::VectorXd&,
                                                                  const Eigen::VectorXd& d) const {
  return 2.0 * d.squaredNorm();
}

MatrixCompletionLoss::MatrixCompletionLoss(int n, std::vector<ObservedEntry> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw ContractViolation("matrix completion needs n >= 1");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : entries_) {
    if (e.row < 0 || e.row >= n_ || e.col < 0 || e.col >= n_)
      throw ContractViolation("observed entry outside the n x n matrix");
    if (!std::isfinite(e.target)) throw ContractViolation("observed entry has a non-finite target");
    if (!seen.emplace(e.row, e.col).second) throw ContractViolation("duplicate observed entry");
  }
}

std::optional<double> MatrixCompletionLoss::strong_convexity() const {
  // Strongly convex only when every entry is observed.
  if (entries_.size() == static_cast<std::size_t>(n_) * n_) return 2.0;
  return std::nullopt;
}

double MatrixCompletionLoss::do_value(const Eigen::VectorXd& x) const {
  double s = 0.0;
  for (const auto& e : entries_) {
    const double r = x[flat(e)] - e.target;
    s += r * r;
  }
  return s;
}

Eigen::VectorXd MatrixCompletionLoss::do_gradient(const Eigen::VectorXd& x) const {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(dimension());
  for (const auto& e : entries_) g[flat(e)] = 2.0 * (x[flat(e)] - e.target);
  return g;
}

std::optional<double> MatrixCompletionLoss::do_quadratic_coefficient(const Eigen::VectorXd&,
                                                                     const Eigen::VectorXd& d) const {
  double s = 0.0;
  for (const auto& e : entries_) s += d[flat(e)] * d[flat(e)];
  return 2.0 * s;
}

}  // namespace bpcg
