#pragma once

#include <stdexcept>

namespace xychain {

// Invalid configuration or precondition violation (bad site count, pair out
// of range, malformed time grid, non-finite parameter).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// State carries weight outside the one-down-spin sector, or a density matrix
// was handed to a sector-only routine without the required zero structure.
struct SectorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure: eigensolver did not converge, or a matrix that should
// be positive semidefinite has an eigenvalue below tolerance.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The entanglement ridge never reached the far end of the chain within the
// sampled time window.
struct FrontNotDetected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output file could not be opened or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace xychain
