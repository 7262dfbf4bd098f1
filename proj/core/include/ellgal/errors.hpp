#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ellgal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TagMismatchError : public Error {
 public:
  using Error::Error;
};

class NotUnimodularError : public Error {
 public:
  using Error::Error;
};

class UnsupportedRotationError : public Error {
 public:
  using Error::Error;
};

/// Raised when a closure, enumeration or search outgrows its configured cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

class UndefinedActionError : public Error {
 public:
  using Error::Error;
};

class ClassificationError : public Error {
 public:
  using Error::Error;
};

class NotRealizableError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class NotOnCurveError : public Error {
 public:
  using Error::Error;
};

class DegeneracyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ellgal
