#pragma once

#include <stdexcept>

namespace ktaylor {

// User-supplied data violates an operation's preconditions.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant failed. Indicates a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ktaylor
