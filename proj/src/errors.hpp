#ifndef STIELTJES_ERRORS_HPP_
#define STIELTJES_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stieltjes {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (Re(v) < 1/2,
// log of zero, saddle validity guard, ...). The message names the violated
// precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A contour point landed on the branch cut of log(a + ix) or made the inner
// log vanish.
class BranchError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iteration (Halley, h-halving, K-doubling) failed to reach tolerance
// within its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// The precision carried by a value cannot pin down the requested digits.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input; `position` is the first offending byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace stieltjes

#endif  // STIELTJES_ERRORS_HPP_
