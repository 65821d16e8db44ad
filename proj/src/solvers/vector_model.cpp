#include "bpcg/solvers/vector_model.hpp"

#include "bpcg/core/errors.hpp"

namespace bpcg {

VectorModel::VectorModel(const Objective& objective, const LinearMinimizationOracle& lmo, Atom start, StepSizer sizer)
    : objective_(objective), lmo_(lmo), active_(std::move(start)), sizer_(std::move(sizer)) {
  if (!active_.tracks_iterate() || active_.iterate().size() != objective_.dimension() ||
      lmo_.dimension() != objective_.dimension())
    throw ContractViolation("start vertex, LMO and objective must share one ambient space");
  refresh();
}

void VectorModel::refresh() {
  value_ = objective_.value(active_.iterate());
  gradient_ = objective_.gradient(active_.iterate());
}

std::vector<double> VectorModel::active_scores() const {
  std::vector<double> scores;
  scores.reserve(active_.size());
  for (const Atom& a : active_.atoms()) scores.push_back(a.dot(gradient_));
  return scores;
}

ScoredAtom VectorModel::linear_minimizer() const {
  Atom w = lmo_.minimize(gradient_);
  const double score = w.dot(gradient_);
  return {std::move(w), score};
}

LineStep VectorModel::search(const Eigen::VectorXd& d, double lambda_max) {
  const Eigen::VectorXd& x = active_.iterate();
  LineProblem line = make_line_problem(objective_, x, gradient_, d);
  LineStep out;
  out.slope = line.slope;
  out.norm_sq = line.norm_sq;
  out.lambda = sizer_(line, lambda_max);
  return out;
}

LineStep VectorModel::line_pairwise(std::size_t away, std::size_t local, double lambda_max) {
  Eigen::VectorXd d = active_.atom(away).to_dense();
  active_.atom(local).add_to(d, -1.0);
  return search(d, lambda_max);
}

LineStep VectorModel::line_pairwise_toward(std::size_t away, const ScoredAtom& toward, double lambda_max) {
  Eigen::VectorXd d = active_.atom(away).to_dense();
  toward.atom.add_to(d, -1.0);
  return search(d, lambda_max);
}

LineStep VectorModel::line_fw(const ScoredAtom& w) {
  Eigen::VectorXd d = active_.iterate();
  w.atom.add_to(d, -1.0);
  return search(d, 1.0);
}

LineStep VectorModel::line_away(std::size_t away, double lambda_max) {
  Eigen::VectorXd d = active_.atom(away).to_dense() - active_.iterate();
  return search(d, lambda_max);
}

StepKind VectorModel::apply_pairwise(std::size_t away, std::size_t local, double lambda) {
  const StepKind kind = active_.apply_pairwise(away, local, lambda);
  refresh();
  return kind;
}

StepKind VectorModel::apply_pairwise_toward(std::size_t away, const ScoredAtom& toward, double lambda) {
  const StepKind kind = active_.apply_pairwise_toward(away, toward.atom, lambda);
  refresh();
  return kind;
}

void VectorModel::apply_fw(const ScoredAtom& w, double lambda) {
  active_.apply_fw(w.atom, lambda);
  refresh();
}

StepKind VectorModel::apply_away(std::size_t away, double lambda) {
  const StepKind kind = active_.apply_away(away, lambda);
  refresh();
  return kind;
}

}  // namespace bpcg
