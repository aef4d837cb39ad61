#pragma once

#include <stdexcept>
#include <string>

namespace latsum {

/// Base class for all latsum computation errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact-core
struct NonUnitLeadingCoefficient : Error {
  using Error::Error;
};
struct ZeroBase : Error {
  using Error::Error;
};

// table I/O
struct FormatError : Error {
  using Error::Error;
};

// pade-strong
struct DegenerateCoefficient : Error {
  using Error::Error;
};

// vpt
struct NonPositiveK0 : Error {
  using Error::Error;
};
struct NoRoot : Error {
  using Error::Error;
};
struct SingularFormula : Error {
  using Error::Error;
};
struct NegativeRadicand : Error {
  using Error::Error;
};

// accel
struct InsufficientData : Error {
  using Error::Error;
};

// large-order
struct AmbiguousPhase : Error {
  using Error::Error;
};
struct ZeroCoefficient : Error {
  using Error::Error;
};
struct NonPositiveB1 : Error {
  using Error::Error;
};

// oracles
struct NonPositiveEpsilon : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};
struct DomainTooShort : Error {
  using Error::Error;
};

}  // namespace latsum
