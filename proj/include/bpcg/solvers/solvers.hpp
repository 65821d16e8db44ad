#ifndef BPCG_SOLVERS_SOLVERS_HPP
#define BPCG_SOLVERS_SOLVERS_HPP

#include "bpcg/core/active_set.hpp"
#include "bpcg/core/trace.hpp"
#include "bpcg/lmo/lmo.hpp"
#include "bpcg/objectives/objective.hpp"
#include "bpcg/solvers/config.hpp"

namespace bpcg {

struct SolverResult {
  ActiveSet active;
  RunTrace trace;
};

/// Blended pairwise conditional gradients.
SolverResult run_bpcg(const Objective& obj, const LinearMinimizationOracle& lmo, const Atom& x0,
                      const SolverConfig& config);
/// Lazified BPCG; stops once 2 Phi <= dual_gap_tolerance.
SolverResult run_lazy_bpcg(const Objective& obj, const LinearMinimizationOracle& lmo, const Atom& x0,
                           const SolverConfig& config);
SolverResult run_vanilla_fw(const Objective& obj, const LinearMinimizationOracle& lmo, const Atom& x0,
                            const SolverConfig& config, VanillaRule rule = VanillaRule::LineSearch);
SolverResult run_afw(const Objective& obj, const LinearMinimizationOracle& lmo, const Atom& x0,
                     const SolverConfig& config);
SolverResult run_pcg(const Objective& obj, const LinearMinimizationOracle& lmo, const Atom& x0,
                     const SolverConfig& config);

/// c_{f,P} = 1/2 min{1/2, mu delta^2 / (4 L D^2)} when all constants are
/// known (reported only).
std::optional<double> linear_rate_constant(const Objective& obj, const LinearMinimizationOracle& lmo);

}  // namespace bpcg

#endif
