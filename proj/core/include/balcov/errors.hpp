#pragma once

#include <stdexcept>
#include <string>

namespace balcov {

/// Caller-supplied data is invalid or inconsistent: malformed literals,
/// indices out of range, dimension mismatches, non-normalized weights, ...
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two objects that must live over the same ground set do not.
class MismatchError : public InputError {
public:
  using InputError::InputError;
};

/// The instance exceeds the supported size envelope.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Repeated random direction draws kept hitting degenerate configurations.
class GenericityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A reference computation could not run (e.g. a loop passing exactly
/// through the base point) or disagreed with the primary route.
class OracleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold under validated preconditions failed.
/// This always indicates a bug, never a legitimate mathematical outcome.
class TheoremViolationError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A region of interest reaches the window boundary (or collides with
/// another region) and cannot be isolated.
class BoundaryContactError : public InputError {
public:
  using InputError::InputError;
};

} // namespace balcov
