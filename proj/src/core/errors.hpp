#pragma once

#include <stdexcept>

namespace skewtab {

// Input text that does not parse.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally valid input outside an operation's domain.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Recognized input for which no route is implemented (method name,
// identity id, suite name, cycle type without a closed evaluation).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exhaustive count would exceed the configured cell cap.
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exactness invariant broke: inexact division, non-integral character,
// negative count. Always a bug, never a user error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace skewtab
