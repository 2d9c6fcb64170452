#pragma once

#include <stdexcept>
#include <string>

namespace sfmlab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A subset or weight vector was built for a different ground set / edge count.
class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine was asked to enumerate beyond its guard.
class EnumerationLimitError : public Error {
 public:
  using Error::Error;
};

// Oracle answers cannot come from any member of the assumed family.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class NotCutFunctionError : public Error {
 public:
  using Error::Error;
};

class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

class DegenerateFunctionError : public Error {
 public:
  using Error::Error;
};

// Malformed construction arguments or input files.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace sfmlab
