#pragma once

#include <stdexcept>
#include <string>

namespace convexity {

/// Base of every error raised by the toolkit. The CLI maps each subclass to
/// a distinct exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: an index outside the ground set, a violated size
/// precondition, an unparsable file.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// An exhaustive scan was requested above its configured size limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A mathematical hypothesis of an operation does not hold for the input
/// (for example the colorful hypothesis, or hulls that already intersect).
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. This always indicates a bug or a space
/// that breaks a theorem the computation relies on.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace convexity
