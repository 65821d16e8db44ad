#include "bpcg/solvers/solvers.hpp"

#include "bpcg/solvers/algorithms.hpp"
#include "bpcg/solvers/vector_model.hpp"

#include <algorithm>

namespace bpcg {

namespace {

template <typename Loop>
SolverResult run_with(const Objective& obj, const LinearMinimizationOracle& lmo, const Atom& x0,
                      const SolverConfig& config, Loop loop) {
  config.validate();
  VectorModel model(obj, lmo, x0, StepSizer(config.step_size, obj.smoothness()));
  RunTrace trace = loop(model);
  return {model.release(), std::move(trace)};
}

}  // namespace

SolverResult run_bpcg(const Objective& obj, const LinearMinimizationOracle& lmo, const Atom& x0,
                      const SolverConfig& config) {
  return run_with(obj, lmo, x0, config, [&](VectorModel& m) { return detail::run_bpcg_loop(m, config); });
}

SolverResult run_lazy_bpcg(const Objective& obj, const LinearMinimizationOracle& lmo, const Atom& x0,
                           const SolverConfig& config) {
  return run_with(obj, lmo, x0, config, [&](VectorModel& m) { return detail::run_lazy_bpcg_loop(m, config); });
}

SolverResult run_vanilla_fw(const Objective& obj, const LinearMinimizationOracle& lmo, const Atom& x0,
                            const SolverConfig& config, VanillaRule rule) {
  return run_with(obj, lmo, x0, config, [&](VectorModel& m) { return detail::run_vanilla_loop(m, config, rule); });
}

SolverResult run_afw(const Objective& obj, const LinearMinimizationOracle& lmo, const Atom& x0,
                     const SolverConfig& config) {
  return run_with(obj, lmo, x0, config, [&](VectorModel& m) { return detail::run_afw_loop(m, config); });
}

SolverResult run_pcg(const Objective& obj, const LinearMinimizationOracle& lmo, const Atom& x0,
                     const SolverConfig& config) {
  return run_with(obj, lmo, x0, config, [&](VectorModel& m) { return detail::run_pcg_loop(m, config); });
}

std::optional<double> linear_rate_constant(const Objective& obj, const LinearMinimizationOracle& lmo) {
  const auto mu = obj.strong_convexity();
  const auto l = obj.smoothness();
  const auto delta = lmo.pyramidal_width();
  const double d = lmo.diameter();
  if (!mu || !l || !delta || d <= 0.0) return std::nullopt;
  return 0.5 * std::min(0.5, *mu * *delta * *delta / (4.0 * *l * d * d));
}

}  // namespace bpcg
