#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sostar {

/// Malformed textual input (clan strings, root names, operator specs).
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// An operation was applied outside its domain (e.g. a Cayley transform
/// through a compact imaginary root).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An internal invariant of an algorithm failed. This always indicates a bug
/// in the library, never bad user input.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace sostar
