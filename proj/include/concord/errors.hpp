#pragma once

#include <stdexcept>
#include <string>

namespace concord {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad expression, non-coprime torus parameters, unparsable text.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation is undefined on the given value (zero polynomial, zero group element).
class UndefinedError : public Error {
 public:
  using Error::Error;
};

/// Input must be a normalized Alexander representative (f(1) = +-1).
class NormalizationRequired : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the operation's range (family index, certificate bounds).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The expression lies outside the class an invariant is implemented for.
class UnsupportedExpression : public Error {
 public:
  using Error::Error;
};

/// Stored data does not determine the answer (germ queried past its range, missing a1).
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// A comparison rule's hypothesis does not hold for the input.
class RuleNotApplicable : public Error {
 public:
  using Error::Error;
};

/// The input polynomial is not of alternating +-1 (L-space) form.
class NotLSpacePolynomial : public Error {
 public:
  using Error::Error;
};

/// Floating-point oracle could not certify its answer.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace concord
