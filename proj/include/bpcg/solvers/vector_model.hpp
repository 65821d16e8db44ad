#ifndef BPCG_SOLVERS_VECTOR_MODEL_HPP
#define BPCG_SOLVERS_VECTOR_MODEL_HPP

#include "bpcg/core/active_set.hpp"
#include "bpcg/lmo/lmo.hpp"
#include "bpcg/objectives/objective.hpp"
#include "bpcg/solvers/model.hpp"
#include "bpcg/solvers/step_size.hpp"

#include <Eigen/Dense>

#include <vector>

namespace bpcg {

/// Finite-dimensional problem: an Objective over conv V(P) accessed through
/// an LMO, with iterates held as dense ambient vectors.
class VectorModel {
 public:
  VectorModel(const Objective& objective, const LinearMinimizationOracle& lmo, Atom start, StepSizer sizer);

  const ActiveSet& active() const { return active_; }
  ActiveSet release() { return std::move(active_); }

  double primal() const { return value_; }
  bool gradient_vanishes() const { return gradient_.lpNorm<Eigen::Infinity>() == 0.0; }
  std::vector<double> active_scores() const;
  double iterate_score() const { return gradient_.dot(active_.iterate()); }
  ScoredAtom linear_minimizer() const;

  LineStep line_pairwise(std::size_t away, std::size_t local, double lambda_max);
  LineStep line_pairwise_toward(std::size_t away, const ScoredAtom& toward, double lambda_max);
  LineStep line_fw(const ScoredAtom& w);
  LineStep line_away(std::size_t away, double lambda_max);

  StepKind apply_pairwise(std::size_t away, std::size_t local, double lambda);
  StepKind apply_pairwise_toward(std::size_t away, const ScoredAtom& toward, double lambda);
  void apply_fw(const ScoredAtom& w, double lambda);
  StepKind apply_away(std::size_t away, double lambda);

  const Eigen::VectorXd& gradient() const { return gradient_; }

 private:
  LineStep search(const Eigen::VectorXd& d, double lambda_max);
  void refresh();

  const Objective& objective_;
  const LinearMinimizationOracle& lmo_;
  ActiveSet active_;
  StepSizer sizer_;
  double value_ = 0.0;
  Eigen::VectorXd gradient_;
};

static_assert(ConditionalGradientModel<VectorModel>);

}  // namespace bpcg

#endif
