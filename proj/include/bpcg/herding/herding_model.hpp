#ifndef BPCG_HERDING_HERDING_MODEL_HPP
#define BPCG_HERDING_HERDING_MODEL_HPP

#include "bpcg/core/active_set.hpp"
#include "bpcg/herding/discrete_measure.hpp"
#include "bpcg/herding/embedding.hpp"
#include "bpcg/herding/herding_lmo.hpp"
#include "bpcg/solvers/model.hpp"
#include "bpcg/solvers/step_size.hpp"

#include <Eigen/Dense>

#include <optional>
#include <unordered_map>
#include <vector>

namespace bpcg {

/// Kernel herding as a conditional-gradient problem over Dirac measures.
///
/// F(xi) = MMD^2(xi, mu) is 2-smooth, and with g(x) = sum_i w_i K(x_i, x) - z(x)
/// the gradient pairing is <grad F(xi), delta_x> = 2 g(x). Along
/// xi - alpha eta, F changes by -alpha <grad F, eta> + alpha^2 E_K(eta), so
/// every line search has a closed form. F is tracked incrementally and
/// compared with a from-scratch value every kDriftCheckInterval steps.
class HerdingModel {
 public:
  static constexpr int kDriftCheckInterval = 50;

  HerdingModel(const EmbeddingCache& cache, const Eigen::VectorXd& x0, StepSizer sizer,
               HerdingLmoOptions lmo_options = {});

  const ActiveSet& active() const { return active_; }
  ActiveSet release() { return std::move(active_); }

  double primal() const { return mmd_sq_; }
  bool gradient_vanishes() const { return false; }
  std::vector<double> active_scores() const;
  double iterate_score() const;
  ScoredAtom linear_minimizer();

  LineStep line_pairwise(std::size_t away, std::size_t local, double lambda_max);
  LineStep line_pairwise_toward(std::size_t away, const ScoredAtom& toward, double lambda_max);
  LineStep line_fw(const ScoredAtom& w);
  LineStep line_away(std::size_t away, double lambda_max);

  StepKind apply_pairwise(std::size_t away, std::size_t local, double lambda);
  StepKind apply_pairwise_toward(std::size_t away, const ScoredAtom& toward, double lambda);
  void apply_fw(const ScoredAtom& w, double lambda);
  StepKind apply_away(std::size_t away, double lambda);

  /// MMD^2 recomputed from the active set.
  double mmd_squared_from_scratch() const;
  double max_drift() const { return max_drift_; }
  std::size_t drift_checks() const { return drift_checks_; }
  std::size_t lmo_calls() const { return lmo_calls_; }

 private:
  struct NodeData {
    double z = 0.0;
    Eigen::VectorXd column;  // K(x, pool)
  };

  const NodeData& node(const Atom& atom);
  double g_of(const ScoredAtom& w) const { return 0.5 * w.score; }
  double z_of(const ScoredAtom& w);
  LineStep search(double slope, double energy, double lambda_max);
  void after_step(double lambda_applied);
  void refresh();

  const EmbeddingCache& cache_;
  HerdingLmoOptions lmo_options_;
  ActiveSet active_;
  StepSizer sizer_;
  std::unordered_map<std::uint64_t, NodeData> nodes_;
  std::optional<std::pair<Atom, double>> last_lmo_;  // atom and its z
  std::vector<double> g_;
  double self_energy_ = 0.0;  // sum_ij w_i w_j K(x_i, x_j)
  Eigen::VectorXd pool_g_;
  double mmd_sq_ = 0.0;
  LineStep pending_;
  int steps_since_check_ = 0;
  double max_drift_ = 0.0;
  std::size_t drift_checks_ = 0;
  std::size_t lmo_calls_ = 0;
};

static_assert(ConditionalGradientModel<HerdingModel>);

}  // namespace bpcg

#endif
