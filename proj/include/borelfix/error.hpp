#pragma once

#include <stdexcept>
#include <string>

namespace borelfix {

/// Failure categories surfaced by the library. The numeric values double as
/// the CLI exit codes and the C API status codes.
enum class ErrorKind : int {
  Domain = 1,           // inadmissible input, out-of-scope coordinates
  InvalidArgument = 2,  // malformed input, violated preconditions
  Feasibility = 3,      // search guard tripped
  Internal = 4,         // impossible state reached
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::Feasibility: return "feasibility";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace borelfix
