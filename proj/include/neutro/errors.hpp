#pragma once

#include <stdexcept>
#include <string>

namespace neutro {

// Every library failure derives from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A scalar argument lies outside the domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A value that must lie in a range does not; carries the offending value.
class RangeError : public Error {
 public:
  RangeError(const std::string& what, double value)
      : Error(what), value_(value) {}
  double value() const noexcept { return value_; }

 private:
  double value_;
};

// Caller misuse: arity mismatch, shape mismatch, bad thresholds.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Components violate the joint constraint of their declared family.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

// A normalizing denominator is zero.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// I^n for n <= 0 and other non-invertible powers.
class UndefinedOperationError : public Error {
 public:
  using Error::Error;
};

// Structured input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace neutro
