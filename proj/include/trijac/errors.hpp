#pragma once

#include <stdexcept>
#include <string>

namespace trijac {

struct TrijacError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A lower Pochhammer symbol of a terminating series vanished inside the sum.
struct DegenerateLowerParameter : TrijacError {
  using TrijacError::TrijacError;
};

// A closed-form coefficient has a vanishing denominator at this index.
struct DegenerateDenominator : TrijacError {
  using TrijacError::TrijacError;
};

// Gamma evaluated at a nonpositive integer.
struct PoleError : TrijacError {
  using TrijacError::TrijacError;
};

// Exact Gamma ratio whose arguments cannot be paired by integer shifts.
struct IrreducibleRatio : TrijacError {
  using TrijacError::TrijacError;
};

// Point outside the closed triangle, or a parameter outside its admissible range.
struct DomainError : TrijacError {
  using TrijacError::TrijacError;
};

struct InvalidParameters : TrijacError {
  using TrijacError::TrijacError;
};

}  // namespace trijac
