#pragma once

#include <stdexcept>
#include <string>

namespace scv {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// A check that must hold by construction did not; signals a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class NonResidue : public Error {
 public:
  using Error::Error;
};

class NonUnit : public Error {
 public:
  using Error::Error;
};

class RamifiedOrNonUnit : public Error {
 public:
  using Error::Error;
};

class NegativeValuation : public Error {
 public:
  using Error::Error;
};

class InvalidD : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class BadReduction : public Error {
 public:
  using Error::Error;
};

class InvalidT : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class Supersingular : public Error {
 public:
  using Error::Error;
};

class NotNearIntegral : public Error {
 public:
  using Error::Error;
};

class AmbiguousRounding : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

}  // namespace scv
