#pragma once

#include <stdexcept>
#include <string>

namespace ghom {

// Malformed user input: bad syntax, inhomogeneous data, rank mismatches.
// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical identity that must hold was violated at runtime.  Always a
// bug (in the engine or in the theory's encoding), never a user mistake.
// The CLI maps this to exit code 1.
class TheoryViolation : public std::runtime_error {
 public:
  explicit TheoryViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ghom
