#ifndef BPCG_CORE_TRACE_HPP
#define BPCG_CORE_TRACE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bpcg {

enum class StepKind { FWStep, DescentStep, DropStep, GapStep };

std::string_view to_string(StepKind kind);
StepKind step_kind_from_string(std::string_view text);

/// One iteration of a conditional-gradient run.
///
/// `primal` is the objective after the step. Everything below the marker is
/// diagnostic data used to check the per-step progress inequalities; it is
/// not part of the CSV schema.
struct StepRecord {
  StepKind kind = StepKind::FWStep;
  double lambda = 0.0;
  double lambda_max = 1.0;
  double pairwise_gap = 0.0;
  std::optional<double> fw_gap;
  std::optional<double> phi;
  double primal = 0.0;
  std::size_t support_size = 0;
  bool lmo_called = false;
  std::uint64_t lmo_calls_cumulative = 0;

  // -- diagnostics
  double primal_before = 0.0;
  /// <grad f(x_t), d_t> for the direction actually taken (0 on gap steps).
  double direction_slope = 0.0;
  /// |d_t|^2 in the ambient (or RKHS) norm.
  double direction_norm_sq = 0.0;
  /// <grad f(x_t), a_t - w_t> whenever the global FW vertex was computed.
  std::optional<double> away_fw_gap;
};

class RunTrace {
 public:
  /// Appends a record, stamping it with the cumulative LMO call count.
  void push(StepRecord record, std::int64_t elapsed_ns);
  void count_lmo_call() { ++lmo_calls_; }

  const std::vector<StepRecord>& records() const { return records_; }
  const std::vector<std::int64_t>& wall_times() const { return wall_times_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  std::size_t t_fw() const { return t_fw_; }
  std::size_t t_desc() const { return t_desc_; }
  std::size_t t_drop() const { return t_drop_; }
  std::size_t t_gap() const { return t_gap_; }
  std::uint64_t lmo_calls() const { return lmo_calls_; }

  /// Objective at the start vertex.
  double initial_primal = 0.0;
  /// Phi_0 for lazified runs.
  std::optional<double> initial_phi;
  /// FW gap observed at the terminating check, if the run stopped on it.
  std::optional<double> final_fw_gap;
  bool converged = false;

 private:
  std::vector<StepRecord> records_;
  std::vector<std::int64_t> wall_times_;
  std::size_t t_fw_ = 0, t_desc_ = 0, t_drop_ = 0, t_gap_ = 0;
  std::uint64_t lmo_calls_ = 0;
};

/// Row of a trace CSV file as read back from disk.
struct TraceCsvRow {
  std::size_t iteration = 0;
  std::optional<std::int64_t> elapsed_ns;
  StepKind kind = StepKind::FWStep;
  double lambda = 0.0;
  double primal = 0.0;
  std::optional<double> fw_gap;
  std::optional<double> pairwise_gap;
  std::optional<double> phi;
  std::size_t support_size = 0;
  std::uint64_t lmo_calls_cumulative = 0;
};

inline constexpr std::string_view kTraceCsvHeader =
    "iteration,elapsed_ns,step_kind,lambda,primal,fw_gap,pairwise_gap,phi,support_size,lmo_calls_cumulative";

/// Writes one row per record. With `include_timing == false` the elapsed_ns
/// field is left empty so that reruns produce byte-identical files.
void write_trace_csv(std::ostream& out, const RunTrace& trace, bool include_timing);

/// Parses a trace CSV. Throws ParseError with the offending line number.
std::vector<TraceCsvRow> read_trace_csv(std::istream& in);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

}  // namespace bpcg

#endif
