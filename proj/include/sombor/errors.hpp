#ifndef SOMBOR_ERRORS_HPP
#define SOMBOR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sombor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller passed an argument outside the operation's domain of ids/values.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parameters describe a mathematically infeasible object (e.g. no tree exists).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A size guard was exceeded (exponential oracles, enumeration caps).
class SizeError : public Error {
 public:
  using Error::Error;
};

/// An edge set or rewiring does not describe a tree.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A transformation was requested on a tree that does not meet its hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list text. line() is 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sombor

#endif  // SOMBOR_ERRORS_HPP
