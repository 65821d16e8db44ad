#ifndef BPCG_CORE_ACTIVE_SET_HPP
#define BPCG_CORE_ACTIVE_SET_HPP

#include "bpcg/core/atom.hpp"
#include "bpcg/core/trace.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

namespace bpcg {

/// Indices of the away vertex (largest score) and local FW vertex (smallest
/// score) inside an active set, with the pairwise gap between them.
struct AwayLocal {
  std::size_t away = 0;
  std::size_t local = 0;
  double pairwise_gap = 0.0;
};

/// Argmax / argmin over per-atom scores <grad, v_i>. Ties go to the lowest
/// index. Throws ContractViolation on an empty span.
AwayLocal select_away_and_local(std::span<const double> scores);

/// Convex combination x = sum_i c_i v_i of pairwise distinct atoms.
///
/// Keeps weights strictly positive and summing to one, and caches the ambient
/// iterate when the atoms have a finite representation. The cache is
/// recomputed from the explicit combination every kReanchorInterval
/// mutations.
class ActiveSet {
 public:
  static constexpr double kWeightFloor = 1e-14;
  static constexpr double kDropTolerance = 1e-14;
  static constexpr int kReanchorInterval = 100;

  explicit ActiveSet(Atom start);
  ActiveSet(std::vector<Atom> atoms, std::vector<double> weights);

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const Atom& atom(std::size_t i) const { return atoms_.at(i); }
  double weight(std::size_t i) const { return weights_.at(i); }
  std::span<const Atom> atoms() const { return atoms_; }
  std::span<const double> weights() const { return weights_; }

  std::optional<std::size_t> find(const Atom& atom) const;

  bool tracks_iterate() const { return tracks_iterate_; }
  /// Cached ambient iterate. Throws ContractViolation for domain-point atoms.
  const Eigen::VectorXd& iterate() const;
  /// Explicit sum_i c_i v_i, bypassing the cache.
  Eigen::VectorXd combination() const;

  /// Moves lambda in [0, c(away)] of weight from `away` to `local`. Removes
  /// `away` when lambda reaches c(away) within kDropTolerance.
  StepKind apply_pairwise(std::size_t away, std::size_t local, double lambda);
  StepKind apply_pairwise(const Atom& away, const Atom& local, double lambda);

  /// Pairwise step toward an atom that may lie outside the set (inserted on
  /// demand). Exhausting weight(away) in favour of a new atom is a swap: the
  /// support size is unchanged but DropStep is still returned.
  StepKind apply_pairwise_toward(std::size_t away, const Atom& toward, double lambda);

  /// x <- (1 - lambda) x + lambda w. Re-adding an existing atom increments its
  /// weight; lambda = 1 collapses the set to {w}.
  void apply_fw(const Atom& w, double lambda);

  /// Away-step update x <- x + lambda (x - a) with lambda in
  /// [0, c(a) / (1 - c(a))]. Removes `a` at the upper end.
  StepKind apply_away(std::size_t away, double lambda);

  /// Largest admissible away-step length for atom `away`.
  double max_away_step(std::size_t away) const;

  /// Throws ContractViolation if any documented invariant is broken.
  void check_invariants() const;

 private:
  void erase(std::size_t i);
  void cleanup();
  void count_mutation();
  void reanchor();

  std::vector<Atom> atoms_;
  std::vector<double> weights_;
  bool tracks_iterate_ = false;
  Eigen::VectorXd iterate_;
  int mutations_since_anchor_ = 0;
};

/// Away vertex, local FW vertex and pairwise gap for an ambient gradient.
AwayLocal away_and_local_fw(const ActiveSet& active, const Eigen::VectorXd& grad);

}  // namespace bpcg

#endif
