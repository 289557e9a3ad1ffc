#pragma once

#include <stdexcept>
#include <string>

namespace aplat {

// Precondition / usage violations (bad arguments, mismatched contexts,
// malformed config). CLI exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Work-size guards tripped before allocation. CLI exit code 3.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace aplat
