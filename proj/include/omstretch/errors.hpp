#pragma once

#include <stdexcept>
#include <string>

namespace omstretch {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument: overlapping subsets, out-of-range labels, bad parameters.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Input that cannot be parsed (malformed JSON, missing fields).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Point configuration whose points do not affinely span R^d.
class RankDeficientError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// A vector that violates the membership equations of the ambient polytope.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Geometrically degenerate input: zero vectors, collinear neighbour pairs.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// An operation invoked on a state that does not satisfy its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Numerical breakdown during flow integration.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// Request outside the supported size range.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace omstretch
