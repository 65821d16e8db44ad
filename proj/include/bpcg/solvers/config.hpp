#ifndef BPCG_SOLVERS_CONFIG_HPP
#define BPCG_SOLVERS_CONFIG_HPP

#include <cstdint>
#include <string_view>

namespace bpcg {

enum class StepSizeRule { ExactLineSearch, ShortStep, Adaptive };

std::string_view to_string(StepSizeRule rule);
/// Accepts "linesearch", "shortstep" and "adaptive"; throws ConfigError otherwise.
StepSizeRule step_size_rule_from_string(std::string_view text);

/// Step rule of the vanilla Frank-Wolfe baseline.
enum class VanillaRule {
  LineSearch,
  /// lambda_t = 1/(t+2) for the 0-based iteration t, i.e. uniform weights
  /// over x_0 and the visited vertices.
  EqualWeight,
};

struct SolverConfig {
  int max_iterations = 1000;
  double dual_gap_tolerance = 1e-7;
  StepSizeRule step_size = StepSizeRule::ExactLineSearch;
  /// Sparsity-control factor on the pairwise/FW selection test; >= 1.
  double k_sc = 1.0;
  /// Lazy accuracy J >= 1 (lazified solvers only).
  double lazy_accuracy = 1.0;
  std::uint64_t seed = 0;

  /// Throws ConfigError on T < 1, K_sc < 1, J < 1 or a negative tolerance.
  void validate() const;
};

}  // namespace bpcg

#endif
