#pragma once

#include <stdexcept>
#include <string>

namespace thom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (model files, polynomial strings, partitions).
struct ParseError : Error {
  using Error::Error;
};

// A precondition or structural invariant of an object does not hold.
struct InvariantError : Error {
  using Error::Error;
};

// Two routes that must agree by an identity produced different values.
struct IdentityCheckError : Error {
  using Error::Error;
};

}  // namespace thom
