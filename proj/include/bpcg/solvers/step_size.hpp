#ifndef BPCG_SOLVERS_STEP_SIZE_HPP
#define BPCG_SOLVERS_STEP_SIZE_HPP

#include "bpcg/objectives/objective.hpp"
#include "bpcg/solvers/config.hpp"

#include <Eigen/Dense>

#include <functional>
#include <optional>

namespace bpcg {

/// Restriction of f to the ray x - lambda d.
struct LineProblem {
  double value0 = 0.0;    ///< f(x)
  double slope = 0.0;     ///< <grad f(x), d>, non-negative for a descent pairing
  double norm_sq = 0.0;   ///< |d|^2
  std::optional<double> curvature;            ///< <d, H d> when f is quadratic
  std::function<double(double)> value_at;     ///< lambda -> f(x - lambda d)
  std::function<double(double)> slope_at;     ///< lambda -> <grad f(x - lambda d), d>
};

/// Chooses lambda in [0, lambda_max] along a LineProblem.
///
/// ExactLineSearch: closed form slope / curvature for quadratics, otherwise
/// golden-section search (tolerance 1e-10, 200 iterations). ShortStep:
/// slope / (L |d|^2). Adaptive: backtracking on a running estimate M of L
/// (M <- 0.9 M at each call, doubled until the quadratic upper bound holds),
/// seeded by a secant estimate of the curvature on the first call.
class StepSizer {
 public:
  StepSizer(StepSizeRule rule, std::optional<double> smoothness);

  double operator()(const LineProblem& line, double lambda_max);

  StepSizeRule rule() const { return rule_; }
  std::optional<double> smoothness_estimate() const { return estimate_; }

  static constexpr double kAdaptiveDecrease = 0.9;
  static constexpr double kAdaptiveIncrease = 2.0;

 private:
  double exact(const LineProblem& line, double lambda_max) const;
  double adaptive(const LineProblem& line, double lambda_max);

  StepSizeRule rule_;
  std::optional<double> smoothness_;
  std::optional<double> estimate_;
};

/// Builds the LineProblem for f along x - lambda d.
LineProblem make_line_problem(const Objective& obj, const Eigen::VectorXd& x, const Eigen::VectorXd& grad_x,
                              const Eigen::VectorXd& d);

/// One-shot step size; `state` carries the Adaptive estimate across calls.
double step_size(const Objective& obj, const Eigen::VectorXd& x, const Eigen::VectorXd& d, double lambda_max,
                 StepSizeRule rule, StepSizer* state = nullptr);

enum class StepChoice { Pairwise, FrankWolfe };

/// Pairwise iff k_sc * pairwise_gap >= fw_gap.
StepChoice select_step(double pairwise_gap, double fw_gap, double k_sc);

}  // namespace bpcg

#endif
