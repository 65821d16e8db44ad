#include "bpcg/core/active_set.hpp"

#include "bpcg/core/errors.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace bpcg {

AwayLocal select_away_and_local(std::span<const double> scores) {
  if (scores.empty()) throw ContractViolation("away/local selection over an empty active set");
  AwayLocal out;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[out.away]) out.away = i;
    if (scores[i] < scores[out.local]) out.local = i;
  }
  out.pairwise_gap = scores[out.away] - scores[out.local];
  return out;
}

AwayLocal away_and_local_fw(const ActiveSet& active, const Eigen::VectorXd& grad) {
  if (!grad.allFinite()) throw ContractViolation("gradient has non-finite components");
  std::vector<double> scores;
  scores.reserve(active.size());
  for (const Atom& a : active.atoms()) scores.push_back(a.dot(grad));
  return select_away_and_local(scores);
}

ActiveSet::ActiveSet(Atom start) {
  tracks_iterate_ = start.has_ambient_representation();
  if (tracks_iterate_) iterate_ = start.to_dense();
  atoms_.push_back(std::move(start));
  weights_.push_back(1.0);
}

ActiveSet::ActiveSet(std::vector<Atom> atoms, std::vector<double> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  if (atoms_.empty() || atoms_.size() != weights_.size())
    throw ContractViolation("active set needs one positive weight per atom");
  for (double w : weights_)
    if (!(w > 0.0)) throw ContractViolation("active set weights must be strictly positive");
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) throw ContractViolation("active set weights must sum to one");
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    for (std::size_t j = i + 1; j < atoms_.size(); ++j)
      if (atoms_[i] == atoms_[j]) throw ContractViolation("active set atoms must be distinct");
  tracks_iterate_ = atoms_.front().has_ambient_representation();
  if (tracks_iterate_) iterate_ = combination();
}

std::optional<std::size_t> ActiveSet::find(const Atom& atom) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i] == atom) return i;
  return std::nullopt;
}

const Eigen::VectorXd& ActiveSet::iterate() const {
  if (!tracks_iterate_) throw ContractViolation("active set of domain points has no ambient iterate");
  return iterate_;
}

Eigen::VectorXd ActiveSet::combination() const {
  if (!tracks_iterate_) throw ContractViolation("active set of domain points has no ambient iterate");
  Eigen::VectorXd x = Eigen::VectorXd::Zero(atoms_.front().ambient_dimension());
  for (std::size_t i = 0; i < atoms_.size(); ++i) atoms_[i].add_to(x, weights_[i]);
  return x;
}

StepKind ActiveSet::apply_pairwise(std::size_t away, std::size_t local, double lambda) {
  if (away >= size() || local >= size()) throw ContractViolation("pairwise step index out of range");
  const double lambda_max = weights_[away];
  if (!(lambda >= 0.0) || lambda > lambda_max + kDropTolerance)
    throw ContractViolation("pairwise step length outside [0, weight(away)]");
  if (away == local) {
    if (lambda != 0.0) throw ContractViolation("pairwise step between an atom and itself");
    return StepKind::DescentStep;
  }
  if (lambda >= lambda_max - kDropTolerance) {
    if (tracks_iterate_) {
      atoms_[away].add_to(iterate_, -lambda_max);
      atoms_[local].add_to(iterate_, lambda_max);
    }
    weights_[local] += lambda_max;
    erase(away);
    count_mutation();
    return StepKind::DropStep;
  }
  if (lambda > 0.0) {
    if (tracks_iterate_) {
      atoms_[away].add_to(iterate_, -lambda);
      atoms_[local].add_to(iterate_, lambda);
    }
    weights_[away] -= lambda;
    weights_[local] += lambda;
    count_mutation();
  }
  return StepKind::DescentStep;
}

StepKind ActiveSet::apply_pairwise(const Atom& away, const Atom& local, double lambda) {
  const auto ia = find(away);
  const auto il = find(local);
  if (!ia || !il) throw ContractViolation("pairwise step atoms must belong to the active set");
  return apply_pairwise(*ia, *il, lambda);
}

StepKind ActiveSet::apply_pairwise_toward(std::size_t away, const Atom& toward, double lambda) {
  if (away >= size()) throw ContractViolation("pairwise step index out of range");
  if (const auto i = find(toward)) return apply_pairwise(away, *i, lambda);
  if (!(lambda >= 0.0) || lambda > weights_[away] + kDropTolerance)
    throw ContractViolation("pairwise step length outside [0, weight(away)]");
  if (lambda == 0.0) return StepKind::DescentStep;
  if (tracks_iterate_ != toward.has_ambient_representation() ||
      (tracks_iterate_ && toward.ambient_dimension() != iterate_.size()))
    throw ContractViolation("pairwise target does not live in the active set's space");
  atoms_.push_back(toward);
  weights_.push_back(0.0);
  return apply_pairwise(away, atoms_.size() - 1, lambda);
}

void ActiveSet::apply_fw(const Atom& w, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ContractViolation("FW step length outside [0, 1]");
  if (tracks_iterate_ != w.has_ambient_representation() ||
      (tracks_iterate_ && w.ambient_dimension() != iterate_.size()))
    throw ContractViolation("FW vertex does not live in the active set's space");
  if (lambda == 1.0) {
    atoms_.assign(1, w);
    weights_.assign(1, 1.0);
    if (tracks_iterate_) iterate_ = w.to_dense();
    mutations_since_anchor_ = 0;
    return;
  }
  if (lambda == 0.0) return;
  for (double& c : weights_) c *= (1.0 - lambda);
  if (tracks_iterate_) {
    iterate_ *= (1.0 - lambda);
    w.add_to(iterate_, lambda);
  }
  if (const auto i = find(w)) {
    weights_[*i] += lambda;
  } else {
    atoms_.push_back(w);
    weights_.push_back(lambda);
  }
  cleanup();
  count_mutation();
}

double ActiveSet::max_away_step(std::size_t away) const {
  const double c = weights_.at(away);
  if (c >= 1.0) throw ContractViolation("away step from the only atom of the active set");
  return c / (1.0 - c);
}

StepKind ActiveSet::apply_away(std::size_t away, double lambda) {
  const double lambda_max = max_away_step(away);
  if (!(lambda >= 0.0) || lambda > lambda_max + kDropTolerance)
    throw ContractViolation("away step length outside [0, c/(1-c)]");
  if (lambda == 0.0) return StepKind::DescentStep;
  const bool drop = lambda >= lambda_max - kDropTolerance;
  const double step = drop ? lambda_max : lambda;
  if (tracks_iterate_) {
    iterate_ *= (1.0 + step);
    atoms_[away].add_to(iterate_, -step);
  }
  for (double& c : weights_) c *= (1.0 + step);
  if (drop) {
    erase(away);
    // Renormalise so the surviving weights sum to exactly one.
    const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    for (double& c : weights_) c /= total;
  } else {
    weights_[away] -= step;
  }
  cleanup();
  count_mutation();
  return drop ? StepKind::DropStep : StepKind::DescentStep;
}

void ActiveSet::check_invariants() const {
  if (atoms_.empty()) throw ContractViolation("active set is empty");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= kWeightFloor)) throw ContractViolation("active set weight below the floor");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw ContractViolation("active set weights sum to " + std::to_string(total));
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    for (std::size_t j = i + 1; j < atoms_.size(); ++j)
      if (atoms_[i] == atoms_[j]) throw ContractViolation("active set holds duplicate atoms");
  if (tracks_iterate_ && (combination() - iterate_).lpNorm<Eigen::Infinity>() > 1e-9)
    throw ContractViolation("cached iterate drifted from the convex combination");
}

void ActiveSet::erase(std::size_t i) {
  atoms_.erase(atoms_.begin() + static_cast<std::ptrdiff_t>(i));
  weights_.erase(weights_.begin() + static_cast<std::ptrdiff_t>(i));
}

void ActiveSet::cleanup() {
  bool removed = false;
  for (std::size_t i = weights_.size(); i-- > 0;) {
    if (weights_[i] < kWeightFloor && weights_.size() > 1) {
      erase(i);
      removed = true;
    }
  }
  if (removed) {
    const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    for (double& c : weights_) c /= total;
    reanchor();
  }
}

void ActiveSet::count_mutation() {
  if (++mutations_since_anchor_ >= kReanchorInterval) reanchor();
}

void ActiveSet::reanchor() {
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  for (double& c : weights_) c /= total;
  if (tracks_iterate_) iterate_ = combination();
  mutations_since_anchor_ = 0;
}

}  // namespace bpcg
