#pragma once

#include <stdexcept>

namespace bei {

// Thrown when a computation exceeds its configured work budget or hard size
// cap. Budgets fail loudly; results are never silently truncated.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bei
