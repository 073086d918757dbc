#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

/// Raised when a configuration generator or enumeration would exceed its cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a sequence source or block supply is too short for the
/// pigeonhole bound an extraction needs.
class InsufficientSourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace ramsey
