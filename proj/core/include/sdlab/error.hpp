#pragma once

#include <stdexcept>
#include <string>

namespace sdlab {

// Raised when an input violates an operation's contract (malformed file,
// out-of-range vertex, invalid witness, unsatisfied precondition...).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when an exhaustive oracle is asked to run beyond its configured size.
class SizeLimitError : public DomainError {
public:
  using DomainError::DomainError;
};

} // namespace sdlab
