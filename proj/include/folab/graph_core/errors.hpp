#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace folab {

// Precondition violated by the arguments (empty graph, bad index, alpha out of range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input exceeds an enumeration cap or a work budget.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed text input. position is 1-based (column for formulas, line for files).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace folab
