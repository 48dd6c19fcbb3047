#pragma once

#include <stdexcept>
#include <string>

namespace winsel {

// Raised by engines when an internal invariant check fails. The harness maps
// this to its own exit code, so it is kept distinct from argument errors.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

class OutOfOrderArrival : public std::invalid_argument {
 public:
  explicit OutOfOrderArrival(const std::string& what) : std::invalid_argument(what) {}
};

class NonUnitInterval : public std::invalid_argument {
 public:
  explicit NonUnitInterval(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace winsel
