#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zerosum {

/// Input violates a structural precondition (wrong coordinate count,
/// element outside the group, division by a non-divisor, ...).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured work budget would be (or was) exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t bound, std::uint64_t limit)
      : std::runtime_error(what + " (bound " + std::to_string(bound) + " exceeds budget " +
                           std::to_string(limit) + ")"),
        bound_(bound),
        limit_(limit) {}

  std::uint64_t bound() const noexcept { return bound_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t bound_;
  std::uint64_t limit_;
};

/// Two independent computations of the same quantity disagreed.
/// Always a bug in this library, never a property of the input.
class ConsistencyFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zerosum
