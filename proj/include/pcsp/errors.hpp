#pragma once

#include <stdexcept>
#include <string>

namespace pcsp {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates an operation's precondition.
struct ParameterError : Error {
  using Error::Error;
};

/// Two objects that must be structurally compatible are not
/// (signature mismatch, unverifiable chain, ...).
struct StructuralError : Error {
  using Error::Error;
};

/// A strict presentation is partial where a total function is required.
struct TotalityError : Error {
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured cap.
struct CapacityError : Error {
  using Error::Error;
};

/// An internal invariant failed. Never swallowed: the toolkit exists to
/// check such invariants, so a violation is surfaced to the caller.
struct InvariantError : Error {
  using Error::Error;
};

/// A refutation builder could not verify its own output.
struct ConstructionError : Error {
  using Error::Error;
};

/// A JSON artifact does not match its schema.
struct SchemaError : Error {
  using Error::Error;
};

} // namespace pcsp
