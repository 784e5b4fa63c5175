#pragma once

#include <stdexcept>
#include <string>

namespace solitonlab {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Evaluation outside the domain of a function (log of a negative jet, a
// degenerate metric, a non-spacelike graph point, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A numerical method could not reach the requested accuracy.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace solitonlab
