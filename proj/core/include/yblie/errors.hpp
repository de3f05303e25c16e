#pragma once

#include <stdexcept>
#include <string>

namespace yblie {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (scalar syntax, structure files).
struct ParseError : Error {
  using Error::Error;
};

/// Dimension / object / side mismatches.
struct ShapeError : Error {
  using Error::Error;
};

/// Mixing scalars or matrices from different fields.
struct FieldMismatch : Error {
  using Error::Error;
};

/// Division by zero or inversion of a singular matrix.
struct Singular : Error {
  using Error::Error;
};

/// solve_through_mono: the right-hand side leaves the image of the mono.
struct NoFactorization : Error {
  using Error::Error;
};

/// solve_through_epi: the right-hand side does not kill the kernel of the epi.
struct NoCofactorization : Error {
  using Error::Error;
};

/// Anyonic braiding requested over a field without a square root of -1.
struct MissingRootOfUnity : Error {
  using Error::Error;
};

/// Operation defined only for trivial/super braidings was called on an
/// anyonic (or otherwise non-symmetric) context.
struct NotSymmetricContext : Error {
  using Error::Error;
};

/// A constructor was handed a structure that fails its own checker.
struct InvalidInput : Error {
  using Error::Error;
};

/// A structure morphism does not descend to the sub- or quotient object.
struct DescentFailure : Error {
  using Error::Error;
};

/// strengthen(): the pairing is not square or its Gram matrix is singular.
struct NotStrong : Error {
  using Error::Error;
};

/// elementary_from_adjoint(): the snake identities fail for (ev, coev).
struct SnakeFailure : Error {
  using Error::Error;
};

/// A constructed object failed its own re-validation.  Indicates a bug, not
/// bad input.
struct InternalCheckFailure : Error {
  using Error::Error;
};

}  // namespace yblie
