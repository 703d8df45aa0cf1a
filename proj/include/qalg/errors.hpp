#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qalg {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Scalars or matrices over different fields were combined. */
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/** Matrix or block shapes do not fit together. */
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/** Objects living over different algebras were combined. */
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

/** An input file or string could not be parsed. */
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/** The presentation is not admissible or the algebra is not finite dimensional. */
class InvalidPresentation : public Error {
 public:
  using Error::Error;
};

/** Some path of the maximal allowed length survives the relations. */
class NonNilpotent : public InvalidPresentation {
 public:
  using InvalidPresentation::InvalidPresentation;
};

/** A configured size cap (enveloping dimension, path count, ...) was exceeded. */
class ResourceCap : public Error {
 public:
  using Error::Error;
};

/** A precondition of an operation does not hold (not a module map, ...). */
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qalg
