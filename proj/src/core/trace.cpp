#include "bpcg/core/trace.hpp"

#include "bpcg/core/errors.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace bpcg {

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::FWStep: return "FW";
    case StepKind::DescentStep: return "descent";
    case StepKind::DropStep: return "drop";
    case StepKind::GapStep: return "gap";
  }
  return "?";
}

StepKind step_kind_from_string(std::string_view text) {
  if (text == "FW") return StepKind::FWStep;
  if (text == "descent") return StepKind::DescentStep;
  if (text == "drop") return StepKind::DropStep;
  if (text == "gap") return StepKind::GapStep;
  throw ContractViolation("unknown step kind '" + std::string(text) + "'");
}

void RunTrace::push(StepRecord record, std::int64_t elapsed_ns) {
  record.lmo_calls_cumulative = lmo_calls_;
  switch (record.kind) {
    case StepKind::FWStep: ++t_fw_; break;
    case StepKind::DescentStep: ++t_desc_; break;
    case StepKind::DropStep: ++t_drop_; break;
    case StepKind::GapStep: ++t_gap_; break;
  }
  records_.push_back(std::move(record));
  wall_times_.push_back(elapsed_ns);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

void write_optional(std::ostream& out, const std::optional<double>& v) {
  if (v) out << format_double(*v);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, const char* column) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto res = std::from_chars(field.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end)
    throw ParseError("bad value '" + std::string(field) + "' in column " + column, line);
  return value;
}

template <typename T>
std::optional<T> parse_optional(std::string_view field, std::size_t line, const char* column) {
  if (field.empty()) return std::nullopt;
  return parse_number<T>(field, line, column);
}

}  // namespace

void write_trace_csv(std::ostream& out, const RunTrace& trace, bool include_timing) {
  out << kTraceCsvHeader << '\n';
  const auto& records = trace.records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const StepRecord& r = records[i];
    out << (i + 1) << ',';
    if (include_timing) out << trace.wall_times()[i];
    out << ',' << to_string(r.kind) << ',' << format_double(r.lambda) << ',' << format_double(r.primal) << ',';
    write_optional(out, r.fw_gap);
    out << ',' << format_double(r.pairwise_gap) << ',';
    write_optional(out, r.phi);
    out << ',' << r.support_size << ',' << r.lmo_calls_cumulative << '\n';
  }
}

std::vector<TraceCsvRow> read_trace_csv(std::istream& in) {
  std::vector<TraceCsvRow> rows;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty trace file", 1);
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTraceCsvHeader) throw ParseError("unexpected trace header", line_no);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 10) throw ParseError("expected 10 fields, got " + std::to_string(f.size()), line_no);
    TraceCsvRow row;
    row.iteration = parse_number<std::size_t>(f[0], line_no, "iteration");
    row.elapsed_ns = parse_optional<std::int64_t>(f[1], line_no, "elapsed_ns");
    try {
      row.kind = step_kind_from_string(f[2]);
    } catch (const ContractViolation&) {
      throw ParseError("unknown step kind '" + std::string(f[2]) + "'", line_no);
    }
    row.lambda = parse_number<double>(f[3], line_no, "lambda");
    row.primal = parse_number<double>(f[4], line_no, "primal");
    row.fw_gap = parse_optional<double>(f[5], line_no, "fw_gap");
    row.pairwise_gap = parse_optional<double>(f[6], line_no, "pairwise_gap");
    row.phi = parse_optional<double>(f[7], line_no, "phi");
    row.support_size = parse_number<std::size_t>(f[8], line_no, "support_size");
    row.lmo_calls_cumulative = parse_number<std::uint64_t>(f[9], line_no, "lmo_calls_cumulative");
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bpcg
