#pragma once

// Error hierarchy shared by every module. Each failure named in the module
// contracts gets its own type so callers (and tests) can tell them apart.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dfaint {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class SizeOverflow : public Error {
 public:
  using Error::Error;
};

class InvalidTarget : public Error {
 public:
  using Error::Error;
};

class StateSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidMachine : public Error {
 public:
  using Error::Error;
};

class EncodingOverflow : public Error {
 public:
  using Error::Error;
};

class MalformedTrace : public Error {
 public:
  using Error::Error;
};

class InvalidStep : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Syntax error in one of the text formats; line is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dfaint
