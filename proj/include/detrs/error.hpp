#pragma once

#include <stdexcept>
#include <string>

namespace detrs {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  Unsupported,
  DegreeMismatch,
  FieldMismatch,
  DivisionByZero,
  BothZero,
  AllZero,
  DuplicateAbscissa,
  ZeroPolynomial,
  NotDivisible,
  YDegreeZero,
  Infeasible,
  NoKernel,
  TrivialKernel,
  PreconditionViolated,
  BadSeed,
  InvalidWord,
  XSliceZero,
  CongruenceBroken,
  PotentialNotDecreasing,
  DegreeTooHigh,
  NoOpEdit,
  OutOfRange,
  TooLarge,
  ParseError,
};

const char* error_kind_name(ErrorKind k);

// Every failure in the library is reported through this one type; callers
// switch on kind() rather than catching a hierarchy.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& what) { throw Error(k, what); }

}  // namespace detrs
