#pragma once

#include <stdexcept>
#include <string>

namespace stratsum {

// Input text could not be parsed; `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A theorem hypothesis does not hold (non-homogeneous form, d < 2, p | d,
// or a singular point found modulo p).
class HypothesisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Requested operation is outside the supported ring/modulus family.
class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace stratsum
