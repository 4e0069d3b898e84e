#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace eitrfm {

using cplx = std::complex<double>;

/// Magnitude below which a closed-form denominator is treated as degenerate.
/// Admissible (gamma, mu, rho) never get close; this only guards nonsense inputs.
inline constexpr double kDegenerateTol = 1e-14;

/// Invalid configuration or parameters outside the admissible set.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fatal numerical failure (decomposition did not converge, degenerate denominator).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Whether the interface coefficients are strictly real or have negative
/// imaginary parts. Selects which data matrix feeds the indicator.
enum class CoefficientMode { kReal, kComplex };

/// Constant interface coefficients (gamma, mu) on the defect boundary.
struct BoundaryParams {
  cplx gamma;
  cplx mu;

  /// Re(gamma) > 0, Re(mu) > 0 always; imaginary parts strictly negative in
  /// complex mode and exactly zero in real mode.
  void validate(CoefficientMode mode) const;
};

/// Concentric circular defect of radius rho inside the unit disk.
struct DiskGeometry {
  double rho;

  void validate() const;  // requires 0 < rho < 1 strictly
};

/// Highest retained Fourier mode |n| of the kernel series.
struct TruncationOrder {
  int n_max;

  void validate() const;  // requires n_max >= 1
};

}  // namespace eitrfm
