#pragma once

#include <Eigen/Dense>

#include "eitrfm/types.hpp"

namespace eitrfm {

enum class MatrixTag { kRealCase, kComplexCase, kImaginaryPart };

/// Dense collocation matrix of the current-gap operator (or its imaginary part)
/// on the equispaced boundary grid theta_j = 2*pi*j/M.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  MatrixTag tag = MatrixTag::kComplexCase;

  int size() const { return static_cast<int>(entries.rows()); }
};

/// Zeroth Fourier symbol, gamma*rho / (1 - gamma*rho*ln(rho)).
/// Throws NumericalError if the denominator is degenerate.
cplx sigma0(const BoundaryParams& params, const DiskGeometry& geom);

/// Fourier symbol for mode n != 0,
///   [2|n|rho^|n| + (mu n^2 + gamma rho^2|n|)(1 + rho^2|n|)]
///   / [2|n|rho^|n| + (mu n^2 + gamma rho^2|n|)(1 - rho^2|n|)].
/// Depends on |n| only, so sigma_n(-n) == sigma_n(n).
cplx sigma_n(int n, const BoundaryParams& params, const DiskGeometry& geom);

/// Assembles the M x M collocation matrix A with
///   A[j,k] = K(theta_j, theta_k) / M,
///   K(theta, phi) = sigma0 + sum_{1<=|n|<=n_max} |n| (sigma_n - 1) e^{i n (theta-phi)}.
/// Sampled pure modes are exact eigenvectors: A e^{i n theta} = |n|(sigma_n - 1) e^{i n theta}.
/// Requires m_grid >= 2*n_max + 1 so every retained mode is resolved.
OperatorMatrix kernel_matrix(const BoundaryParams& params, const DiskGeometry& geom,
                             const TruncationOrder& trunc, int m_grid);

}  // namespace eitrfm
