#pragma once

#include <stdexcept>
#include <string>

namespace tangle4 {

/// Raised by parsers (ket expressions, complex literals, state files).
/// `position` is the zero-based offset into the input at which the
/// problem was detected; it is also embedded in the message text.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when an operation that needs a nonzero state vector receives
/// the zero vector (normalization, symmetry tests, classification, ...).
class zero_state_error : public std::invalid_argument {
 public:
  explicit zero_state_error(const std::string& message)
      : std::invalid_argument(message) {}
};

/// Raised by classify_symmetric when the input is not permutation
/// symmetric at the requested tolerance; callers should fall back to
/// the general classifier.
class not_symmetric_error : public std::invalid_argument {
 public:
  explicit not_symmetric_error(const std::string& message)
      : std::invalid_argument(message) {}
};

}  // namespace tangle4
