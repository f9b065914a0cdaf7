#pragma once

#include <stdexcept>

namespace synctsp {

// Error categories, aligned with the CLI exit codes:
//   InfeasibleError -> 1 (an expected negative answer)
//   InputError      -> 2 (malformed or precondition-violating input)
//   CapExceededError-> 3 (instance larger than the configured search caps)
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace synctsp
