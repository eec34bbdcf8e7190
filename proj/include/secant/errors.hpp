#pragma once

#include <stdexcept>
#include <string>

namespace secant {

// Base class so callers can catch everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad parameters, out-of-range points, non-facets.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Parameters outside the range where the secant constructions apply
// (t >= a, or the ideal is trivial).
class UnsupportedRegimeError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (facets, generators, S-pairs, memo entries)
// would be exceeded.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace secant
