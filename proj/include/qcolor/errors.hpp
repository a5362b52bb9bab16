#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcolor {

/// Invalid numeric parameter (probability outside [0,1], k > N, t out of range, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller bug: out-of-range vertex, self-query. Never charged to a ledger.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed edge-list or coloring file. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IncompleteColoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a randomized coloring exceeds its per-vertex draw cap,
/// which only happens if the supplied degree bound is below the true one.
class AttemptCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algorithm documented as always correct produced an improper coloring.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcolor
