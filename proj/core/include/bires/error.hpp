#pragma once

#include <stdexcept>
#include <string>

namespace bires {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition on user data.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text that does not conform to the polynomial grammar.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The computation itself failed: rank defect, no admissible strand degree, empty strand.
class MathError : public Error {
 public:
  using Error::Error;
};

}  // namespace bires
