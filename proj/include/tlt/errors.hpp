#pragma once

#include <stdexcept>
#include <string>

namespace tlt {

// Base for everything thrown by the library.
struct TltError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument values (malformed shapes, k out of the documented domain, ...).
struct DomainError : TltError {
  using TltError::TltError;
};

// Edge index outside 1..n+1 for an insertion.
struct IndexOutOfRange : TltError {
  using TltError::TltError;
};

// encode() could not find a unique predecessor. Assertion-grade: firing on a
// valid tableau means the undo construction is wrong.
struct NotReachable : TltError {
  using TltError::TltError;
};

// Removal maps demand an occupied corner.
struct NotOccupied : TltError {
  using TltError::TltError;
};

// Polynomial recurrences must integrate to integer coefficients.
struct NonIntegerCoefficient : TltError {
  using TltError::TltError;
};

// Q polynomials must contain even powers only.
struct OddPowerPresent : TltError {
  using TltError::TltError;
};

// Class representative lookup. Both assertion-grade: uniqueness is a theorem.
struct NoCanonical : TltError {
  using TltError::TltError;
};
struct MultipleCanonical : TltError {
  using TltError::TltError;
};

// Lattice-path preconditions.
struct NotBelow : TltError {
  using TltError::TltError;
};
struct NotCommonCorner : TltError {
  using TltError::TltError;
};

// PASEP chain construction / solve.
struct InvalidParams : TltError {
  using TltError::TltError;
};
struct NotIrreducible : TltError {
  using TltError::TltError;
};

// Verification suites reject n ranges outside documented feasibility.
struct InfeasibleN : TltError {
  using TltError::TltError;
};

}  // namespace tlt
