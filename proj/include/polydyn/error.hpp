#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polydyn {

/// Raised when an operation's precondition is violated by its inputs.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or number text. `position` is a 0-based offset.
class ParseError : public DomainError {
public:
  ParseError(const std::string& message, std::size_t position)
      : DomainError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace polydyn
