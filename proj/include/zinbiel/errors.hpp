#pragma once

#include <stdexcept>
#include <string>

namespace zinbiel {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Vector/matrix sizes do not match.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Textual scalar or expression could not be parsed.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Lower series fails to reach zero within dim+1 steps.
class NotNilpotentError : public Error {
  public:
    using Error::Error;
};

/// Family parameters violate the family's validity constraints.
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// JSON input violates the on-disk schema.
class SchemaError : public Error {
  public:
    using Error::Error;
};

/// Input falls outside the supported scope (e.g. more than two generators).
class UnsupportedError : public Error {
  public:
    using Error::Error;
};

} // namespace zinbiel
