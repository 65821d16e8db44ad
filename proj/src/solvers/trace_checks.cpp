#include "bpcg/solvers/trace_checks.hpp"

#include "bpcg/core/active_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bpcg {

void CheckReport::add(std::size_t index, double margin, double tolerance) {
  if (checked == 0 || margin < worst_margin) worst_margin = margin;
  ++checked;
  if (margin < -tolerance) {
    ++violations;
    if (!first_violation) first_violation = index;
  }
}

void CheckReport::merge(const CheckReport& other) {
  if (other.checked == 0) return;
  if (checked == 0 || other.worst_margin < worst_margin) worst_margin = other.worst_margin;
  if (!first_violation) first_violation = other.first_violation;
  checked += other.checked;
  violations += other.violations;
}

std::string CheckReport::summary() const {
  std::string s = std::to_string(violations) + "/" + std::to_string(checked) + " violations, worst margin " +
                  format_double(worst_margin);
  if (first_violation) s += ", first at record " + std::to_string(*first_violation);
  return s;
}

CheckReport check_gap_inequality(const RunTrace& trace, double k_sc, double tolerance) {
  CheckReport report;
  const auto& records = trace.records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const StepRecord& r = records[i];
    if (!r.away_fw_gap || r.kind == StepKind::GapStep) continue;
    report.add(i, (k_sc + 1.0) * r.direction_slope - *r.away_fw_gap, tolerance);
  }
  return report;
}

CheckReport check_progress_inequality(const RunTrace& trace, double smoothness, double diameter, bool include_fw,
                                      double tolerance) {
  CheckReport report;
  const double denom = 2.0 * smoothness * diameter * diameter;
  const auto& records = trace.records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const StepRecord& r = records[i];
    bool applies = r.kind == StepKind::DescentStep;
    if (include_fw && r.kind == StepKind::FWStep && r.direction_norm_sq > 0.0)
      applies = r.direction_slope / (smoothness * r.direction_norm_sq) < 1.0;
    if (!applies) continue;
    const double progress = r.primal_before - r.primal;
    report.add(i, progress - r.direction_slope * r.direction_slope / denom, tolerance);
  }
  return report;
}

CheckReport check_no_swap(const RunTrace& trace, std::size_t initial_support) {
  CheckReport report;
  std::size_t previous = initial_support;
  const auto& records = trace.records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const StepRecord& r = records[i];
    if (r.kind == StepKind::DropStep || r.kind == StepKind::DescentStep) {
      const bool exhausted = r.lambda >= r.lambda_max - ActiveSet::kDropTolerance;
      if (exhausted) report.add(i, previous == r.support_size + 1 ? 0.0 : -1.0, 0.0);
    }
    previous = r.support_size;
  }
  return report;
}

CheckReport check_drop_bound(const RunTrace& trace) {
  CheckReport report;
  long fw = 0, drop = 0;
  const auto& records = trace.records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].kind == StepKind::FWStep) ++fw;
    if (records[i].kind == StepKind::DropStep) ++drop;
    report.add(i, static_cast<double>(fw - drop), 0.0);
  }
  return report;
}

CheckReport check_monotone(const RunTrace& trace, double tolerance) {
  CheckReport report;
  double previous = trace.initial_primal;
  const auto& records = trace.records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const double scale = std::max(1.0, std::abs(previous));
    report.add(i, (previous - records[i].primal) / scale, tolerance);
    previous = records[i].primal;
  }
  return report;
}

CheckReport check_record_invariants(const RunTrace& trace) {
  CheckReport report;
  std::optional<double> phi = trace.initial_phi;
  const auto& records = trace.records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const StepRecord& r = records[i];
    switch (r.kind) {
      case StepKind::DropStep: report.add(i, r.lambda == r.lambda_max ? 0.0 : -1.0, 0.0); break;
      case StepKind::DescentStep: report.add(i, r.lambda < r.lambda_max ? 0.0 : -1.0, 0.0); break;
      case StepKind::GapStep:
        report.add(i, (phi && r.phi && *r.phi == *phi / 2.0) ? 0.0 : -1.0, 0.0);
        break;
      case StepKind::FWStep: report.add(i, r.lambda >= 0.0 && r.lambda <= 1.0 ? 0.0 : -1.0, 0.0); break;
    }
    if (r.phi) phi = r.phi;
  }
  return report;
}

CheckReport check_primal_bound(const RunTrace& trace, double f_star, const std::function<double(std::size_t)>& bound,
                               double tolerance) {
  CheckReport report;
  const auto& records = trace.records();
  for (std::size_t i = 0; i < records.size(); ++i) report.add(i, bound(i + 1) - (records[i].primal - f_star), tolerance);
  return report;
}

}  // namespace bpcg
