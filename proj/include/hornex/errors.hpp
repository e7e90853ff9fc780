#ifndef HORNEX_ERRORS_HPP
#define HORNEX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hornex {

/// Malformed input: bad syntax, out-of-range variable, non-Horn clause.
/// `line()` is 0 when the error is not tied to a source line.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The input contains an empty negative clause (the empty CNF clause), so it
/// has no models at all. Rows cannot express the empty family, so this is
/// reported at load time instead of reaching the engine.
class UnsatisfiableInput : public InputError {
 public:
  using InputError::InputError;
};

/// Violated structural invariant of a row (partition, bubble size).
class RowError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pruning policy or counting strategy was requested for an instance or
/// cardinality filter that does not meet its preconditions.
class PolicyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hornex

#endif  // HORNEX_ERRORS_HPP
