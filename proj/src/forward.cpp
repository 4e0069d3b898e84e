#include "eitrfm/forward.hpp"

#include <cmath>
#include <stdexcept>

namespace eitrfm {

void BoundaryParams::validate(CoefficientMode mode) const {
  if (!(gamma.real() > 0.0) || !(mu.real() > 0.0)) {
    throw ValidationError("boundary coefficients need Re(gamma) > 0 and Re(mu) > 0");
  }
  if (mode == CoefficientMode::kReal) {
    if (gamma.imag() != 0.0 || mu.imag() != 0.0) {
      throw ValidationError("real mode needs Im(gamma) = Im(mu) = 0 exactly");
    }
  } else {
    if (!(gamma.imag() < 0.0) || !(mu.imag() < 0.0)) {
      throw ValidationError("complex mode needs Im(gamma) < 0 and Im(mu) < 0");
    }
  }
}

void DiskGeometry::validate() const {
  if (!(rho > 0.0) || !(rho < 1.0)) {
    throw ValidationError("defect radius rho must lie strictly in (0, 1)");
  }
}

void TruncationOrder::validate() const {
  if (n_max < 1) {
    throw ValidationError("truncation order n_max must be >= 1");
  }
}

cplx sigma0(const BoundaryParams& params, const DiskGeometry& geom) {
  const double rho = geom.rho;
  const cplx denom = 1.0 - params.gamma * rho * std::log(rho);
  if (std::abs(denom) < kDegenerateTol) {
    throw NumericalError("degenerate parameters: 1 - gamma*rho*ln(rho) vanishes");
  }
  return params.gamma * rho / denom;
}

cplx sigma_n(int n, const BoundaryParams& params, const DiskGeometry& geom) {
  if (n == 0) {
    throw ValidationError("sigma_n requires n != 0");
  }
  const double an = std::abs(n);
  const double rn = std::pow(geom.rho, an);
  const double r2n = rn * rn;
  const cplx common = 2.0 * an * rn;
  const cplx q = params.mu * an * an + params.gamma * r2n;
  const cplx denom = common + q * (1.0 - r2n);
  if (std::abs(denom) < kDegenerateTol) {
    throw NumericalError("degenerate parameters: sigma_n denominator vanishes");
  }
  return (common + q * (1.0 + r2n)) / denom;
}

OperatorMatrix kernel_matrix(const BoundaryParams& params, const DiskGeometry& geom,
                             const TruncationOrder& trunc, int m_grid) {
  geom.validate();
  trunc.validate();
  const CoefficientMode mode =
      (params.gamma.imag() == 0.0 && params.mu.imag() == 0.0) ? CoefficientMode::kReal
                                                              : CoefficientMode::kComplex;
  params.validate(mode);
  if (m_grid < 2 * trunc.n_max + 1) {
    throw ValidationError("m_grid must be >= 2*n_max + 1 to resolve all retained modes");
  }

  const cplx s0 = sigma0(params, geom);
  Eigen::VectorXcd mode_weight(trunc.n_max);  // |n| (sigma_n - 1)
  for (int n = 1; n <= trunc.n_max; ++n) {
    mode_weight(n - 1) = static_cast<double>(n) * (sigma_n(n, params, geom) - 1.0);
  }

  // Circulant: the entry depends only on the angle difference.
  const int m = m_grid;
  Eigen::VectorXcd first_row(m);
  for (int k = 0; k < m; ++k) {
    const double dtheta = 2.0 * M_PI * k / m;
    cplx sum = s0;
    for (int n = 1; n <= trunc.n_max; ++n) {
      // e^{in d} + e^{-in d} = 2 cos(n d), same weight for +-n
      sum += mode_weight(n - 1) * 2.0 * std::cos(n * dtheta);
    }
    first_row(k) = sum / static_cast<double>(m);
  }

  OperatorMatrix out;
  out.entries.resize(m, m);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      out.entries(j, k) = first_row(((j - k) % m + m) % m);
    }
  }
  out.tag = (mode == CoefficientMode::kReal) ? MatrixTag::kRealCase : MatrixTag::kComplexCase;
  return out;
}

}  // namespace eitrfm
