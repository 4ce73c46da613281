#pragma once

#include <stdexcept>
#include <string>

namespace permwold {

// Malformed input: letter index out of range, bad theta, unknown node.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration or search exceeded its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation that needs a theta-commuting pair was handed one that fails
// the commutation check.
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition (e.g. element outside PH).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace permwold
