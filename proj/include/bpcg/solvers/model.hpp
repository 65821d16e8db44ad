#ifndef BPCG_SOLVERS_MODEL_HPP
#define BPCG_SOLVERS_MODEL_HPP

#include "bpcg/core/active_set.hpp"
#include "bpcg/core/atom.hpp"

#include <concepts>
#include <cstddef>
#include <vector>

namespace bpcg {

/// An atom together with its score <grad f(x), v>.
struct ScoredAtom {
  Atom atom;
  double score = 0.0;
};

/// Outcome of a line search along x - lambda d.
struct LineStep {
  double lambda = 0.0;
  double slope = 0.0;    ///< <grad f(x), d>
  double norm_sq = 0.0;  ///< |d|^2
};

/// What the conditional-gradient loops need from a problem: the current
/// active set, scores <grad f(x), v>, one LMO, line searches along the four
/// directions used by the algorithm family, and the matching updates.
/// Every apply_* call leaves the model refreshed at the new iterate.
template <typename M>
concept ConditionalGradientModel = requires(M m, const M cm, std::size_t i, const ScoredAtom& w, double lambda) {
  { cm.active() } -> std::same_as<const ActiveSet&>;
  { cm.primal() } -> std::convertible_to<double>;
  { cm.gradient_vanishes() } -> std::convertible_to<bool>;
  { cm.active_scores() } -> std::convertible_to<std::vector<double>>;
  { cm.iterate_score() } -> std::convertible_to<double>;
  { m.linear_minimizer() } -> std::same_as<ScoredAtom>;
  { m.line_pairwise(i, i, lambda) } -> std::same_as<LineStep>;
  { m.line_pairwise_toward(i, w, lambda) } -> std::same_as<LineStep>;
  { m.line_fw(w) } -> std::same_as<LineStep>;
  { m.line_away(i, lambda) } -> std::same_as<LineStep>;
  { m.apply_pairwise(i, i, lambda) } -> std::same_as<StepKind>;
  { m.apply_pairwise_toward(i, w, lambda) } -> std::same_as<StepKind>;
  { m.apply_fw(w, lambda) };
  { m.apply_away(i, lambda) } -> std::same_as<StepKind>;
};

}  // namespace bpcg

#endif
