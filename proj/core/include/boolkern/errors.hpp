#pragma once

#include <stdexcept>
#include <string>

namespace boolkern {

// Every failure raised by the library derives from Error so callers can
// catch the family; the CLI maps each subclass to a fixed exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand lengths (bit vectors, feature spaces, streams) disagree.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// A malformed value or an out-of-domain parameter.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A resource guard (expansion size, support weight, variable count) was hit.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// The reduction's derived parameters fail one of their constraints.
class ParameterViolation : public Error {
 public:
  using Error::Error;
};

// A claim checked during a simulated run did not hold.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

// Randomized construction exhausted its attempt budget.
class GenerationFailed : public Error {
 public:
  using Error::Error;
};

// A labeled sequence is not consistent with any monotone function.
class ConsistencyViolation : public Error {
 public:
  using Error::Error;
};

// A preset, config document or command line that cannot be acted on.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace boolkern
