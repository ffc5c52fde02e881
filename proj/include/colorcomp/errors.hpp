#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace colorcomp {

// Thrown when a computation would exceed a configured resource cap
// (DP table size, enumeration size). Carries the estimate that tripped
// the guard, when one is available.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::string what, std::string estimate = {})
      : std::runtime_error(std::move(what)), estimate_(std::move(estimate)) {}

  // Decimal string of the estimated count, empty if not applicable.
  const std::string& estimate() const { return estimate_; }

 private:
  std::string estimate_;
};

}  // namespace colorcomp
