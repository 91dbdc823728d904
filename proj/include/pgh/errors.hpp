#pragma once

#include <stdexcept>
#include <string>

namespace pgh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: malformed presentation, violated parameter constraint,
/// failed precondition. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An internal verification failed (tails rank, cover check, SNF check).
/// Never valid output; the CLI maps these to exit code 3.
class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace pgh
