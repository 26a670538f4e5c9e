// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FINALG_ERRORS_HPP_
#define FINALG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace finalg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An element does not belong to the algebra it is used with, or a vector
/// or matrix has the wrong size.
class DimensionMismatchError final : public Error {
 public:
  using Error::Error;
};

/// The algebra has no two-sided identity within the requested tolerance.
class NoIdentityError final : public Error {
 public:
  using Error::Error;
};

/// A linear solve met its conditioning threshold but the verified residual
/// exceeded the requested bound.
class ResidualFailureError final : public Error {
 public:
  using Error::Error;
};

/// The dense eigenvalue routine failed to converge.
class EigenFailureError final : public Error {
 public:
  using Error::Error;
};

/// A Cayley table is not associative or lacks the declared identity.
class InvalidSemigroupError final : public Error {
 public:
  using Error::Error;
};

/// A group-only construction was applied to a semigroup that is not a group.
class NotAGroupError final : public Error {
 public:
  using Error::Error;
};

/// A Gram matrix is not Hermitian within tolerance.
class NotHermitianError final : public Error {
 public:
  using Error::Error;
};

/// A Gram matrix is numerically singular.
class DegenerateFormError final : public Error {
 public:
  using Error::Error;
};

/// A star structure does not square to the identity.
class NotInvolutiveError final : public Error {
 public:
  using Error::Error;
};

/// The zero polynomial was passed where a nonzero one is required.
class ZeroPolynomialError final : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or JSON document.
class ParseError final : public Error {
 public:
  using Error::Error;
};

}  // namespace finalg

#endif  // FINALG_ERRORS_HPP_
