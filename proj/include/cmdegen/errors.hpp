#pragma once

#include <stdexcept>
#include <string>

namespace cmdegen {

// Invalid ring spec, unknown indecomposable, mismatched specs.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed module expression. `position` is a 0-based byte offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An internal certificate failed to re-validate. Never expected; signals a bug
// in the engine (or a counterexample to a theorem it relies on).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The AUTO degree bound did not stabilize before the configured cap.
class StabilizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cmdegen
