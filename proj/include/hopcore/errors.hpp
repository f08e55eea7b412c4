#pragma once

#include <stdexcept>
#include <string>

namespace hopcore {

enum class ErrorKind {
  invalid_parameter,
  invalid_weight,
  invalid_metric,
  invalid_input,
  precondition_violation,
  witness_too_heavy,
  sampling_failure,
  coverage_failure,
  infeasible_instance,
  too_many_groups,
  budget_exceeded,
  parse_error,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::invalid_weight: return "invalid-weight";
    case ErrorKind::invalid_metric: return "invalid-metric";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::precondition_violation: return "precondition-violation";
    case ErrorKind::witness_too_heavy: return "witness-too-heavy";
    case ErrorKind::sampling_failure: return "sampling-failure";
    case ErrorKind::coverage_failure: return "coverage-failure";
    case ErrorKind::infeasible_instance: return "infeasible-instance";
    case ErrorKind::too_many_groups: return "too-many-groups";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

inline void require(bool cond, ErrorKind kind, const std::string& detail) {
  if (!cond) fail(kind, detail);
}

}  // namespace hopcore
