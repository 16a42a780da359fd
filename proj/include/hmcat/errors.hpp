#pragma once

#include <stdexcept>
#include <string>

namespace hmcat {

/// Base of every error thrown by hmcat.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input references something that does not exist, or shapes disagree.
/// Distinct from axiom violations, which are reported, not thrown.
struct StructuralError : Error {
  using Error::Error;
};

struct FieldMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

/// A requested complex or matrix exceeds the configured budget.
struct ResourceError : Error {
  using Error::Error;
};

/// An operation that needs a free action was given a non-free one.
struct NonFreeAction : Error {
  using Error::Error;
};

/// Input violates a precondition on its mathematical content (e.g. a
/// multiplication table that is not associative).
struct InvalidInput : Error {
  using Error::Error;
};

}  // namespace hmcat
