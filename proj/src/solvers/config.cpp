#include "bpcg/solvers/config.hpp"

#include "bpcg/core/errors.hpp"

#include <cmath>
#include <string>

namespace bpcg {

std::string_view to_string(StepSizeRule rule) {
  switch (rule) {
    case StepSizeRule::ExactLineSearch: return "linesearch";
    case StepSizeRule::ShortStep: return "shortstep";
    case StepSizeRule::Adaptive: return "adaptive";
  }
  return "?";
}

StepSizeRule step_size_rule_from_string(std::string_view text) {
  if (text == "linesearch") return StepSizeRule::ExactLineSearch;
  if (text == "shortstep") return StepSizeRule::ShortStep;
  if (text == "adaptive") return StepSizeRule::Adaptive;
  throw ConfigError("unknown step-size rule '" + std::string(text) + "' (expected linesearch, shortstep or adaptive)");
}

void SolverConfig::validate() const {
  if (max_iterations < 1) throw ConfigError("max_iterations must be at least 1");
  if (!(k_sc >= 1.0) || !std::isfinite(k_sc)) throw ConfigError("k_sc must be a finite value >= 1");
  if (!(lazy_accuracy >= 1.0) || !std::isfinite(lazy_accuracy))
    throw ConfigError("lazy accuracy J must be a finite value >= 1");
  if (!(dual_gap_tolerance >= 0.0)) throw ConfigError("dual_gap_tolerance must be non-negative");
}

}  // namespace bpcg
