#pragma once

#include <stdexcept>
#include <string>

namespace lrb {

/// Bad user input: malformed files, dimension mismatches, violated
/// preconditions. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parse failure in a fixture file. `context` names the field or path.
class ParseError : public InputError {
 public:
  ParseError(const std::string& context, const std::string& what)
      : InputError(context + ": " + what), context_(context) {}
  const std::string& context() const noexcept { return context_; }

 private:
  std::string context_;
};

/// Shapes that do not fit together.
class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

/// Structure constants or actions that fail an algebraic axiom. The message
/// always carries the witness (triple, pair, ...).
class AxiomError : public InputError {
 public:
  using InputError::InputError;
};

/// Something the mathematics guarantees did not happen. Maps to exit code 3.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lrb
