#pragma once

#include <stdexcept>
#include <string>

namespace macwalk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedType : Error {
  using Error::Error;
};

struct RankMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// Raised when a wall label fails to normalize to -gamma + jd with j >= 1,
// which signals a non-reduced or non-minimal word upstream.
struct NonpositiveLevel : Error {
  using Error::Error;
};

struct NonReducedWord : Error {
  using Error::Error;
};

struct NotDominant : Error {
  using Error::Error;
};

struct ZeroDenominator : Error {
  using Error::Error;
};

struct PoleAtSpecialization : Error {
  using Error::Error;
};

struct RankTooLargeForSvg : Error {
  using Error::Error;
};

struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace macwalk
