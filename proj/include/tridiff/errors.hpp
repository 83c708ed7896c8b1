// Error taxonomy for the simulator. Each category maps to a distinct
// CLI exit code (see tools/main.cpp).
#pragma once

#include <stdexcept>

namespace tridiff {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Invalid parameter or field value (non-positive ratio, bad spring data, ...).
class ValidationError : public Error {
  public:
    using Error::Error;
};

// Impossible pipe/bend geometry (e.g. bend radius not exceeding pipe radius).
class GeometryError : public Error {
  public:
    using Error::Error;
};

// Constraint set with no consistent solution, or an indeterminate system.
class InfeasibleError : public Error {
  public:
    using Error::Error;
};

// Clamp cannot reach the requested pipe wall within its travel stops.
class FitError : public Error {
  public:
    using Error::Error;
};

// Scenario file is not readable as the documented format.
class ParseError : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

}  // namespace tridiff
