#pragma once

#include <stdexcept>
#include <string>

namespace normcomm {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text or files (cycle notation, JSON algebras, subset specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on mathematical input failed: not a subalgebra, a table
/// violating its variety's laws, a relation that is not a congruence.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The computation is well-posed but declined: size caps, budgets, or a
/// variety without a supported strategy.
class Refusal : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same value disagreed. Always a bug or a
/// genuine theory boundary; never swallowed.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace normcomm
