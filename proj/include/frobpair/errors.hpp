#ifndef FROBPAIR_ERRORS_HPP
#define FROBPAIR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobpair {

// Malformed polynomial text. position is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// A 32-bit exponent or a p^e computation left its representable range.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

// An intermediate polynomial exceeded the configured term budget.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands live in different rings (different p or variable lists).
class ContextMismatch : public std::invalid_argument {
public:
  ContextMismatch() : std::invalid_argument("polynomials belong to different rings") {}
};

} // namespace frobpair

#endif // FROBPAIR_ERRORS_HPP
