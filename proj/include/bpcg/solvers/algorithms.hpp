#ifndef BPCG_SOLVERS_ALGORITHMS_HPP
#define BPCG_SOLVERS_ALGORITHMS_HPP

#include "bpcg/core/trace.hpp"
#include "bpcg/solvers/config.hpp"
#include "bpcg/solvers/model.hpp"
#include "bpcg/solvers/step_size.hpp"

#include <chrono>
#include <cstdint>
#include <vector>

// Conditional-gradient loops written once against ConditionalGradientModel,
// shared by the finite-dimensional solvers and kernel herding.

namespace bpcg::detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ns() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

template <ConditionalGradientModel M>
void finish_record(M& model, StepRecord& rec, const LineStep& line) {
  rec.direction_slope = line.slope;
  rec.direction_norm_sq = line.norm_sq;
  rec.primal = model.primal();
  rec.support_size = model.active().size();
}

/// Blended pairwise conditional gradients. One LMO call per iteration; a
/// local pairwise step is taken iff k_sc * pairwise gap >= FW gap.
template <ConditionalGradientModel M>
RunTrace run_bpcg_loop(M& model, const SolverConfig& config) {
  config.validate();
  RunTrace trace;
  Stopwatch clock;
  trace.initial_primal = model.primal();
  for (int t = 0; t < config.max_iterations; ++t) {
    if (model.gradient_vanishes()) {
      trace.converged = true;
      trace.final_fw_gap = 0.0;
      break;
    }
    const std::vector<double> scores = model.active_scores();
    const AwayLocal sel = select_away_and_local(scores);
    const ScoredAtom w = model.linear_minimizer();
    trace.count_lmo_call();
    const double fw_gap = model.iterate_score() - w.score;
    if (fw_gap <= config.dual_gap_tolerance) {
      trace.converged = true;
      trace.final_fw_gap = fw_gap;
      break;
    }
    StepRecord rec;
    rec.pairwise_gap = sel.pairwise_gap;
    rec.fw_gap = fw_gap;
    rec.away_fw_gap = scores[sel.away] - w.score;
    rec.lmo_called = true;
    rec.primal_before = model.primal();
    LineStep line;
    if (select_step(sel.pairwise_gap, fw_gap, config.k_sc) == StepChoice::Pairwise) {
      rec.lambda_max = model.active().weight(sel.away);
      line = model.line_pairwise(sel.away, sel.local, rec.lambda_max);
      rec.kind = model.apply_pairwise(sel.away, sel.local, line.lambda);
      rec.lambda = rec.kind == StepKind::DropStep ? rec.lambda_max : line.lambda;
    } else {
      rec.lambda_max = 1.0;
      line = model.line_fw(w);
      model.apply_fw(w, line.lambda);
      rec.kind = StepKind::FWStep;
      rec.lambda = line.lambda;
    }
    finish_record(model, rec, line);
    trace.push(rec, clock.elapsed_ns());
  }
  return trace;
}

/// Lazified BPCG. The global LMO is called once to initialise Phi and then
/// only on iterations whose local pairwise gap falls below Phi.
template <ConditionalGradientModel M>
RunTrace run_lazy_bpcg_loop(M& model, const SolverConfig& config) {
  config.validate();
  RunTrace trace;
  Stopwatch clock;
  trace.initial_primal = model.primal();
  if (model.gradient_vanishes()) {
    trace.converged = true;
    trace.final_fw_gap = 0.0;
    return trace;
  }
  {
    const ScoredAtom w0 = model.linear_minimizer();
    trace.count_lmo_call();
    trace.initial_phi = (model.iterate_score() - w0.score) / 2.0;
  }
  double phi = *trace.initial_phi;
  for (int t = 0; t < config.max_iterations; ++t) {
    if (model.gradient_vanishes()) {
      trace.converged = true;
      trace.final_fw_gap = 0.0;
      break;
    }
    if (2.0 * phi <= config.dual_gap_tolerance) {
      trace.converged = true;
      break;
    }
    const std::vector<double> scores = model.active_scores();
    const AwayLocal sel = select_away_and_local(scores);
    StepRecord rec;
    rec.pairwise_gap = sel.pairwise_gap;
    rec.primal_before = model.primal();
    LineStep line;
    if (sel.pairwise_gap >= phi) {
      rec.lambda_max = model.active().weight(sel.away);
      line = model.line_pairwise(sel.away, sel.local, rec.lambda_max);
      rec.kind = model.apply_pairwise(sel.away, sel.local, line.lambda);
      rec.lambda = rec.kind == StepKind::DropStep ? rec.lambda_max : line.lambda;
    } else {
      const ScoredAtom w = model.linear_minimizer();
      trace.count_lmo_call();
      rec.lmo_called = true;
      const double fw_gap = model.iterate_score() - w.score;
      rec.fw_gap = fw_gap;
      rec.away_fw_gap = scores[sel.away] - w.score;
      if (fw_gap >= phi / config.lazy_accuracy) {
        rec.lambda_max = 1.0;
        line = model.line_fw(w);
        model.apply_fw(w, line.lambda);
        rec.kind = StepKind::FWStep;
        rec.lambda = line.lambda;
      } else {
        phi /= 2.0;
        rec.kind = StepKind::GapStep;
        rec.lambda = 0.0;
        rec.lambda_max = 0.0;
      }
    }
    rec.phi = phi;
    finish_record(model, rec, line);
    trace.push(rec, clock.elapsed_ns());
  }
  return trace;
}

/// Classical Frank-Wolfe with line search or the equal-weight rule
/// lambda_t = 1/(t+2).
template <ConditionalGradientModel M>
RunTrace run_vanilla_loop(M& model, const SolverConfig& config, VanillaRule rule) {
  config.validate();
  RunTrace trace;
  Stopwatch clock;
  trace.initial_primal = model.primal();
  for (int t = 0; t < config.max_iterations; ++t) {
    if (model.gradient_vanishes()) {
      trace.converged = true;
      trace.final_fw_gap = 0.0;
      break;
    }
    const std::vector<double> scores = model.active_scores();
    const AwayLocal sel = select_away_and_local(scores);
    const ScoredAtom w = model.linear_minimizer();
    trace.count_lmo_call();
    const double fw_gap = model.iterate_score() - w.score;
    if (fw_gap <= config.dual_gap_tolerance) {
      trace.converged = true;
      trace.final_fw_gap = fw_gap;
      break;
    }
    StepRecord rec;
    rec.kind = StepKind::FWStep;
    rec.pairwise_gap = sel.pairwise_gap;
    rec.fw_gap = fw_gap;
    rec.away_fw_gap = scores[sel.away] - w.score;
    rec.lmo_called = true;
    rec.primal_before = model.primal();
    rec.lambda_max = 1.0;
    LineStep line = model.line_fw(w);
    if (rule == VanillaRule::EqualWeight) line.lambda = 1.0 / static_cast<double>(t + 2);
    model.apply_fw(w, line.lambda);
    rec.lambda = line.lambda;
    finish_record(model, rec, line);
    trace.push(rec, clock.elapsed_ns());
  }
  return trace;
}

/// Away-step Frank-Wolfe: the FW direction x - w or the away direction a - x,
/// whichever has the larger gap (FW on ties).
template <ConditionalGradientModel M>
RunTrace run_afw_loop(M& model, const SolverConfig& config) {
  config.validate();
  RunTrace trace;
  Stopwatch clock;
  trace.initial_primal = model.primal();
  for (int t = 0; t < config.max_iterations; ++t) {
    if (model.gradient_vanishes()) {
      trace.converged = true;
      trace.final_fw_gap = 0.0;
      break;
    }
    const std::vector<double> scores = model.active_scores();
    const AwayLocal sel = select_away_and_local(scores);
    const ScoredAtom w = model.linear_minimizer();
    trace.count_lmo_call();
    const double x_score = model.iterate_score();
    const double fw_gap = x_score - w.score;
    if (fw_gap <= config.dual_gap_tolerance) {
      trace.converged = true;
      trace.final_fw_gap = fw_gap;
      break;
    }
    const double away_gap = scores[sel.away] - x_score;
    StepRecord rec;
    rec.pairwise_gap = sel.pairwise_gap;
    rec.fw_gap = fw_gap;
    rec.away_fw_gap = scores[sel.away] - w.score;
    rec.lmo_called = true;
    rec.primal_before = model.primal();
    LineStep line;
    if (fw_gap >= away_gap || model.active().size() == 1) {
      rec.lambda_max = 1.0;
      line = model.line_fw(w);
      model.apply_fw(w, line.lambda);
      rec.kind = StepKind::FWStep;
      rec.lambda = line.lambda;
    } else {
      rec.lambda_max = model.active().max_away_step(sel.away);
      line = model.line_away(sel.away, rec.lambda_max);
      rec.kind = model.apply_away(sel.away, line.lambda);
      rec.lambda = rec.kind == StepKind::DropStep ? rec.lambda_max : line.lambda;
    }
    finish_record(model, rec, line);
    trace.push(rec, clock.elapsed_ns());
  }
  return trace;
}

/// Pairwise conditional gradients: weight moves from the away vertex to the
/// global FW vertex with lambda_max = weight(away). Exhausting the away
/// weight in favour of a new vertex is a swap step (recorded as a drop).
template <ConditionalGradientModel M>
RunTrace run_pcg_loop(M& model, const SolverConfig& config) {
  config.validate();
  RunTrace trace;
  Stopwatch clock;
  trace.initial_primal = model.primal();
  for (int t = 0; t < config.max_iterations; ++t) {
    if (model.gradient_vanishes()) {
      trace.converged = true;
      trace.final_fw_gap = 0.0;
      break;
    }
    const std::vector<double> scores = model.active_scores();
    const AwayLocal sel = select_away_and_local(scores);
    const ScoredAtom w = model.linear_minimizer();
    trace.count_lmo_call();
    const double fw_gap = model.iterate_score() - w.score;
    if (fw_gap <= config.dual_gap_tolerance) {
      trace.converged = true;
      trace.final_fw_gap = fw_gap;
      break;
    }
    StepRecord rec;
    rec.pairwise_gap = sel.pairwise_gap;
    rec.fw_gap = fw_gap;
    rec.away_fw_gap = scores[sel.away] - w.score;
    rec.lmo_called = true;
    rec.primal_before = model.primal();
    rec.lambda_max = model.active().weight(sel.away);
    const LineStep line = model.line_pairwise_toward(sel.away, w, rec.lambda_max);
    rec.kind = model.apply_pairwise_toward(sel.away, w, line.lambda);
    rec.lambda = rec.kind == StepKind::DropStep ? rec.lambda_max : line.lambda;
    finish_record(model, rec, line);
    trace.push(rec, clock.elapsed_ns());
  }
  return trace;
}

}  // namespace bpcg::detail

#endif
