#pragma once

#include <stdexcept>
#include <string>

namespace betti {

// Base class of everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed values or violated preconditions.
struct ValidationError : Error {
  using Error::Error;
};

// Unreadable text or JSON input.
struct ParseError : Error {
  using Error::Error;
};

// Entrywise subtraction would produce a negative entry.
struct NonNegativityViolation : Error {
  using Error::Error;
};

// A diagram is not supported on the six quiver-simplex positions, or is not
// the image of a non-negative integer triplet.
struct NotInSimplexError : Error {
  using Error::Error;
};

// The hypotheses needed to derive a certificate or obstruction do not hold.
struct InconclusiveError : Error {
  using Error::Error;
};

// A constructed certificate failed one of its own checks.
struct ConstructionError : Error {
  using Error::Error;
};

}  // namespace betti
