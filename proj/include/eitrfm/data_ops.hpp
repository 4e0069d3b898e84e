#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Dense>

#include "eitrfm/forward.hpp"

namespace eitrfm {

/// Relative multiplicative noise, A^delta = [A_ij (1 + delta E_ij)] with
/// ||E||_2 = 1 and E drawn i.i.d. uniform on [-1,1] before rescaling.
struct NoiseModel {
  double delta = 0.0;
  std::uint64_t seed = 0;
};

/// Singular values (nonincreasing) and singular vectors of a data matrix.
/// Zero singular values are retained; filtering happens in the sampling module.
struct SvdFactors {
  Eigen::VectorXd singular_values;
  Eigen::MatrixXcd left_vectors;   // columns u_j, orthonormal
  Eigen::MatrixXcd right_vectors;  // columns v_j
};

/// The normalized noise matrix E for a given size and seed: entries drawn
/// i.i.d. uniform on [-1,1] in row-major order from a seeded mt19937_64 via
/// the 53-bit mantissa mapping, then rescaled so the spectral norm is 1.
/// Same (m, seed) gives the same matrix on every platform.
Eigen::MatrixXd noise_matrix(int m, std::uint64_t seed);

/// Entrywise perturbation A_ij (1 + delta E_ij). delta = 0 returns the input
/// bitwise unchanged. Deterministic for a fixed seed; E is drawn fresh per call.
OperatorMatrix add_noise(const OperatorMatrix& a, const NoiseModel& noise);

/// Hermitian imaginary part of the data matrix, (A* - A) / (2i), symmetrized
/// so the result is exactly Hermitian. The sign makes the noise-free
/// complex-mode operator positive semidefinite.
OperatorMatrix imaginary_part(const OperatorMatrix& a);

/// Full SVD. Throws NumericalError on non-finite input or failed convergence.
SvdFactors svd(const OperatorMatrix& a);

/// Column-major CSV of interleaved (re, im) entries with header line
/// `# eit-rfm matrix M=<int> mode=<tag>`.
void write_matrix_csv(const OperatorMatrix& a, std::ostream& out);
void write_matrix_csv(const OperatorMatrix& a, const std::string& path);

}  // namespace eitrfm
