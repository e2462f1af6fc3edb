#pragma once

#include <stdexcept>
#include <string>

namespace resilience {

// Numerical failure (overflow, tolerance disagreement, singular innovation).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The team is not collectively observable; no communication graph can help.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The reconfiguration loop hit its hard iteration cap (cost plateau).
class IterationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent scenario input.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace resilience
