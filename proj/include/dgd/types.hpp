#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dgd {

using cplx = std::complex<double>;

/// Default pass threshold for every numerical identity check.
inline constexpr double kDefaultTol = 1e-9;

/// Coefficients below this magnitude are dropped from sparse elements.
inline constexpr double kPruneTol = 1e-12;

/// Seed shared by every randomized step (fallback splitting, property tests).
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Selects the serial reference loop or the OpenMP kernel.
enum class Exec { serial, parallel };

/// Raised for malformed user input (bad group spec, bad file, bad table).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a numerical procedure cannot reach its postcondition.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dgd
