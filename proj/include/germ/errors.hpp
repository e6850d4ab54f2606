#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germ {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition or malformed user input. The CLI maps it to exit code 2.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::string code = "input")
      : Error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at byte " + std::to_string(offset), "syntax"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Pair is not log canonical where the operation needs it to be.
class NotLcError : public InputError {
 public:
  NotLcError(const std::string& what, std::string witness)
      : InputError(what, "not_lc"), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

// A proven inequality failed. Always a bug in this library, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace germ
