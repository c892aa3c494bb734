#pragma once

#include <stdexcept>
#include <string>

namespace pmvc {

// Malformed or out-of-range input (files, CLI arguments, API preconditions).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size limit was exceeded (oracle enumeration cap, round cap).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed; always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pmvc
