#pragma once

#include <stdexcept>
#include <string>

namespace nfl {

enum class ErrorKind {
  codomain_mismatch, // observed value not in a policy's declared codomain
  budget,            // requested trace length exceeds the space
  empty_trace,       // a measure applied to nothing
  cap_exceeded,      // an enumeration refused to build more than the cap
  precondition,      // a documented precondition violated (not-CUP input, ties, ...)
  schema,            // malformed problem definition or input file
  invariant,         // a type invariant violated at construction
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::codomain_mismatch: return "codomain-mismatch";
    case ErrorKind::budget: return "budget";
    case ErrorKind::empty_trace: return "empty-trace";
    case ErrorKind::cap_exceeded: return "enumeration-too-large";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::schema: return "schema";
    case ErrorKind::invariant: return "invariant";
  }
  return "unknown";
}

} // namespace nfl
