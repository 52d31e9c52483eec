#pragma once

#include <stdexcept>
#include <string>

namespace arrsym {

// Bad parameters, malformed input files, precondition violations.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured guard (search nodes, enumeration size, vertex count) was hit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency check failed; indicates a bug, never user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arrsym
