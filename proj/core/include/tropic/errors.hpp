#ifndef TROPIC_ERRORS_HPP
#define TROPIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropic {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NonSquareError : public Error {
public:
  using Error::Error;
};

/// An enumeration cap (permutation size, outcome-vector count, ...) was exceeded.
class TooLargeError : public Error {
public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

class ShapeMismatchError : public Error {
public:
  using Error::Error;
};

class NonpositiveAlphaError : public Error {
public:
  using Error::Error;
};

class UnassignedVariableError : public Error {
public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
  using Error::Error;
};

/// A column of the outcome function is not incentive compatible where it must be.
class NotICError : public Error {
public:
  using Error::Error;
};

class EmptyGridError : public Error {
public:
  using Error::Error;
};

/// Malformed textual/JSON input.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace tropic

#endif
