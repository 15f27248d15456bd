#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

// Base of every error raised by the library. kind() is the stable tag used in
// the CLI's structured error output.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Input outside the mathematical domain of an operation (|mu| >= 1, p out of
// range, d = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

// Manifold kind for which the requested table or verdict is not available.
class UnsupportedKind : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "unsupported-kind"; }
};

class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invariant"; }
};

class ClassificationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "classification"; }
};

// Derived quantity came out impossible (negative Poisson rank, ...): the
// splitting data fed in cannot belong to one bundle.
class ModelInconsistency : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "model-inconsistency"; }
};

class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

}  // namespace hopf
