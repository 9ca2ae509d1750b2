#pragma once

#include <stdexcept>
#include <string>

namespace spanfact {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: cycle notation, word strings, config documents.
/// Carries the offending field and token so messages can point at them.
class ParseError : public Error {
public:
  ParseError(std::string field, std::string token, const std::string &what)
      : Error(field.empty() ? what
                            : "field '" + field + "': " + what +
                                  (token.empty() ? "" : " (token '" + token + "')")),
        field_(std::move(field)), token_(std::move(token)) {}

  const std::string &field() const noexcept { return field_; }
  const std::string &token() const noexcept { return token_; }

private:
  std::string field_;
  std::string token_;
};

/// An operation was called on inputs that violate its stated precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

class SizeMismatchError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class InvalidPermutationError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class NotSubgroupError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class InvalidPresentationError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class NotStronglyConnectedError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class InvalidDigraphError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class NotAutomorphismError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

/// x = F2^-1 F1 has cycles of different lengths, so no position system exists.
class UniformityError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

/// A permutation splits a block of the system it was applied to.
class NonInvarianceError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

/// An enumeration outgrew a configured cap (group order, cycle count).
class CapExceededError : public Error {
public:
  using Error::Error;
};

/// A structural law that the analysis relies on did not hold on this input.
class InconsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace spanfact
