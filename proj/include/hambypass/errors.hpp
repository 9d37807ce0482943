#pragma once

#include <stdexcept>
#include <string>

namespace hambypass {

// Invalid arc list or vertex index while building a digraph.
struct construction_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Caller violated an operation's precondition (bad k, overlapping paths, ...).
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured size cap (isomorphism order, exhaustive order).
struct capability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Family parameters outside the family's domain.
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed digraph / certificate text. Carries the offending line when known.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace hambypass
