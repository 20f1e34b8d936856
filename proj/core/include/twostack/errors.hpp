#pragma once

#include <stdexcept>

namespace twostack {

// An argument outside the mathematical domain of an operation
// (out-of-range n or k, a Type 2 input to the reduction map, a bad mark).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed text input: permutations, trees, suite names.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal identity failed, e.g. a closed form that should divide exactly
// left a remainder. Never expected on correct code.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace twostack
