#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace madcolor {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input data: malformed files, out-of-range vertex ids, self-loops.
struct MalformedInputError : Error {
  using Error::Error;
};

// A documented precondition of an operation was violated by the caller.
struct ContractError : Error {
  using Error::Error;
};

// A brute-force oracle refused to run because the instance exceeds its cap.
struct CapExceededError : Error {
  using Error::Error;
};

// A produced coloring failed re-verification.
struct CheckerViolationError : Error {
  using Error::Error;
};

// A simulated node program exceeded its round cap. Carries the vertices
// that had not halted when the cap was hit.
struct DivergenceError : Error {
  DivergenceError(const std::string& what, std::vector<int> vertices)
      : Error(what), non_halted(std::move(vertices)) {}
  std::vector<int> non_halted;
};

// The peeling loop found no happy vertices while vertices remain; this
// signals that the degree budget d is below the maximum average degree.
struct ProgressStallError : Error {
  using Error::Error;
};

// A quantitative guarantee that must hold for valid inputs was violated
// at run time (only raised when guarantees are enforced, i.e. with the
// default radius coefficient).
struct BoundViolationError : Error {
  using Error::Error;
};

}  // namespace madcolor
