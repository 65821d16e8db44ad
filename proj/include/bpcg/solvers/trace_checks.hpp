#ifndef BPCG_SOLVERS_TRACE_CHECKS_HPP
#define BPCG_SOLVERS_TRACE_CHECKS_HPP

#include "bpcg/core/trace.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

namespace bpcg {

/// Result of checking one inequality over a trace.
struct CheckReport {
  std::size_t checked = 0;
  std::size_t violations = 0;
  /// Smallest (lhs - rhs) seen; negative beyond the tolerance means a violation.
  double worst_margin = 0.0;
  std::optional<std::size_t> first_violation;  ///< 0-based record index

  bool ok() const { return violations == 0; }
  void add(std::size_t index, double margin, double tolerance);
  void merge(const CheckReport& other);
  std::string summary() const;
};

/// (k_sc + 1) <grad, d_t> >= <grad, a_t - w_t> - tol on every record where
/// the global FW vertex was computed.
CheckReport check_gap_inequality(const RunTrace& trace, double k_sc, double tolerance = 1e-9);

/// f(x_t) - f(x_{t+1}) >= <grad, d_t>^2 / (2 L D^2) - tol on every descent
/// step and, when `include_fw` is set, on every FW step whose short step
/// slope / (L |d|^2) is below one.
CheckReport check_progress_inequality(const RunTrace& trace, double smoothness, double diameter,
                                      bool include_fw = true, double tolerance = 1e-9);

/// Steps that exhaust lambda_max on a pairwise/away move must remove one
/// atom. Counts swaps (exhausted weight, support unchanged or grown).
CheckReport check_no_swap(const RunTrace& trace, std::size_t initial_support = 1);

/// t_drop <= t_fw on every prefix.
CheckReport check_drop_bound(const RunTrace& trace);

/// primal non-increasing up to `tolerance` (relative to max(1, |f|)).
CheckReport check_monotone(const RunTrace& trace, double tolerance = 1e-12);

/// Record-kind invariants: DropStep has lambda = lambda_max, DescentStep
/// lambda < lambda_max, GapStep halves phi.
CheckReport check_record_invariants(const RunTrace& trace);

/// primal(t) - f_star <= bound(t) for the 1-based iteration t.
CheckReport check_primal_bound(const RunTrace& trace, double f_star, const std::function<double(std::size_t)>& bound,
                               double tolerance = 0.0);

}  // namespace bpcg

#endif
