#pragma once

#include <stdexcept>
#include <string>

namespace filiform {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  using Error::Error;
};

/// Division by zero / inversion of the zero element.
struct ZeroInverse : Error {
  using Error::Error;
};

/// Square root of a negative rational requested.
struct NegativeRadicand : Error {
  using Error::Error;
};

/// Squarefree extraction or radicand factorization needs primes above the
/// configured trial-division bound.
struct SquarefreeBoundExceeded : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct DuplicateEntries : Error {
  using Error::Error;
};

struct NotPositiveDefinite : Error {
  using Error::Error;
};

/// Operation requires a graded algebra (graded flag set and verified).
struct NotGraded : Error {
  using Error::Error;
};

struct NotAnIdeal : Error {
  using Error::Error;
};

/// The ideal does not decompose as (ideal ∩ h) ⊕ (ideal ∩ h⊥).
struct SplitConditionFails : Error {
  using Error::Error;
};

/// A catalog family parameter violates the family's restriction table.
struct RestrictionViolated : Error {
  using Error::Error;
};

struct BadDimension : Error {
  using Error::Error;
};

struct NonSquareConstantTerm : Error {
  using Error::Error;
};

struct DegreeTooHigh : Error {
  using Error::Error;
};

struct DuplicateMagnitudes : Error {
  using Error::Error;
};

/// A vector that must be nonzero for the construction degenerated to zero.
struct DegenerateVector : Error {
  using Error::Error;
};

/// An identity the construction must satisfy failed; names the stage.
struct CertificationFailed : Error {
  using Error::Error;
};

struct SearchTooLarge : Error {
  using Error::Error;
};

/// All three coefficients of a form combination are zero.
struct ZeroCombination : Error {
  using Error::Error;
};

/// Orthogonalization produced a degree-adapted vector with a degenerate
/// chain pairing; indicates a bug, never expected on valid input.
struct AdaptedBasisDegenerate : Error {
  using Error::Error;
};

/// A form matrix K_1, K_2, K_3 fails its shape or skew-symmetry check.
struct BadK : Error {
  using Error::Error;
};

}  // namespace filiform
