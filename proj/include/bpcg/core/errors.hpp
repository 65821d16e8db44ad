#ifndef BPCG_CORE_ERRORS_HPP
#define BPCG_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bpcg {

/// A caller broke a documented precondition (empty active set, step outside
/// its admissible interval, malformed atom payload, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Invalid user-supplied configuration: unknown experiment, missing
/// smoothness constant for the short-step rule, unsupported dimension.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries the 1-based line number of the offending row.
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : ConfigError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A numerical routine failed at run time (eigen-solver iteration cap,
/// singular Gram system).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bpcg

#endif
