#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sets, tables and distances disagree on the universe they live in.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A universe (or atom count) outside the configured bounds.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Malformed distance/operator/theory input.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input that breaks its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownAtomError : public ParseError {
 public:
  UnknownAtomError(const std::string& name, std::size_t position)
      : ParseError("unknown atom '" + name + "'", position), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Only consistent theories may be revised or used for revision.
class InconsistentTheoryError : public Error {
 public:
  using Error::Error;
};

}  // namespace revlab
