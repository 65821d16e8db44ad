#include "bpcg/solvers/step_size.hpp"

#include "bpcg/core/errors.hpp"
#include "bpcg/numerics/golden_section.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bpcg {

namespace {

double clip(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

}  // namespace

StepSizer::StepSizer(StepSizeRule rule, std::optional<double> smoothness) : rule_(rule), smoothness_(smoothness) {
  if (rule_ == StepSizeRule::ShortStep && !(smoothness_ && *smoothness_ > 0.0))
    throw ConfigError("the short-step rule needs a known smoothness constant L");
}

double StepSizer::operator()(const LineProblem& line, double lambda_max) {
  if (!(lambda_max >= 0.0)) throw ContractViolation("step-size upper bound must be non-negative");
  if (lambda_max == 0.0 || !(line.slope > 0.0) || !(line.norm_sq > 0.0)) return 0.0;
  switch (rule_) {
    case StepSizeRule::ExactLineSearch: return exact(line, lambda_max);
    case StepSizeRule::ShortStep: return clip(line.slope / (*smoothness_ * line.norm_sq), 0.0, lambda_max);
    case StepSizeRule::Adaptive: return adaptive(line, lambda_max);
  }
  return 0.0;
}

double StepSizer::exact(const LineProblem& line, double lambda_max) const {
  if (line.curvature) {
    if (*line.curvature <= 0.0) return lambda_max;
    return clip(line.slope / *line.curvature, 0.0, lambda_max);
  }
  if (!std::isfinite(lambda_max) || !line.value_at)
    throw ContractViolation("golden-section line search needs a finite interval and a value callback");
  const auto best = numerics::golden_section_minimize(line.value_at, 0.0, lambda_max, 1e-10, 200);
  // The left endpoint is always evaluated, so best.value <= f(x).
  return best.argmin;
}

double StepSizer::adaptive(const LineProblem& line, double lambda_max) {
  if (!line.value_at) throw ContractViolation("adaptive step size needs a value callback");
  double m;
  if (!estimate_) {
    m = std::numeric_limits<double>::quiet_NaN();
    if (line.slope_at) {
      const double eps = 1e-3 * (std::isfinite(lambda_max) ? std::min(1.0, lambda_max) : 1.0);
      m = std::abs(line.slope - line.slope_at(eps)) / (eps * line.norm_sq);
    }
    if (!(m > 0.0) || !std::isfinite(m)) m = smoothness_.value_or(1.0);
  } else {
    m = kAdaptiveDecrease * *estimate_;
  }
  double lambda = 0.0;
  for (int it = 0; it < 200; ++it) {
    lambda = std::min(line.slope / (m * line.norm_sq), lambda_max);
    const double bound = line.value0 - lambda * line.slope + 0.5 * lambda * lambda * m * line.norm_sq;
    // Relative slack absorbs rounding when the bound is tight (quadratics).
    if (line.value_at(lambda) <= bound + 1e-12 * (std::abs(line.value0) + lambda * line.slope)) break;
    m *= kAdaptiveIncrease;
  }
  estimate_ = m;
  if (line.value_at(lambda) > line.value0) return 0.0;
  return lambda;
}

LineProblem make_line_problem(const Objective& obj, const Eigen::VectorXd& x, const Eigen::VectorXd& grad_x,
                              const Eigen::VectorXd& d) {
  LineProblem line;
  line.value0 = obj.value(x);
  line.slope = grad_x.dot(d);
  line.norm_sq = d.squaredNorm();
  line.curvature = obj.quadratic_coefficient(x, d);
  line.value_at = [&obj, &x, &d](double lambda) { return obj.value(x - lambda * d); };
  line.slope_at = [&obj, &x, &d](double lambda) { return obj.gradient(x - lambda * d).dot(d); };
  return line;
}

double step_size(const Objective& obj, const Eigen::VectorXd& x, const Eigen::VectorXd& d, double lambda_max,
                 StepSizeRule rule, StepSizer* state) {
  const LineProblem line = make_line_problem(obj, x, obj.gradient(x), d);
  if (state) return (*state)(line, lambda_max);
  StepSizer sizer(rule, obj.smoothness());
  return sizer(line, lambda_max);
}

StepChoice select_step(double pairwise_gap, double fw_gap, double k_sc) {
  return k_sc * pairwise_gap >= fw_gap ? StepChoice::Pairwise : StepChoice::FrankWolfe;
}

}  // namespace bpcg
