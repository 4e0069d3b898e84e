#include "eitrfm/data_ops.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <random>

#include <Eigen/SVD>

namespace eitrfm {

namespace {

const char* tag_name(MatrixTag tag) {
  switch (tag) {
    case MatrixTag::kRealCase: return "real-case";
    case MatrixTag::kComplexCase: return "complex-case";
    case MatrixTag::kImaginaryPart: return "imaginary-part";
  }
  return "unknown";
}

// 53-bit mantissa mapping to [0,1); identical on every platform for a given
// mt19937_64 stream, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Eigen::MatrixXd noise_matrix(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::MatrixXd e(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      e(i, j) = 2.0 * uniform01(rng) - 1.0;
    }
  }
  const double norm = e.jacobiSvd().singularValues()(0);
  if (!(norm > 0.0)) {
    throw NumericalError("noise matrix has zero spectral norm");
  }
  return e / norm;
}

OperatorMatrix add_noise(const OperatorMatrix& a, const NoiseModel& noise) {
  if (noise.delta < 0.0) {
    throw ValidationError("noise level delta must be nonnegative");
  }
  if (noise.delta == 0.0) {
    return a;
  }
  const int m = a.size();
  const Eigen::MatrixXd e = noise_matrix(m, noise.seed);
  OperatorMatrix out = a;
  out.entries.array() *= (1.0 + noise.delta * e.array()).cast<cplx>();
  return out;
}

OperatorMatrix imaginary_part(const OperatorMatrix& a) {
  // Sign convention: the current-gap symbols have negative imaginary parts
  // when Im(gamma), Im(mu) < 0, so the positive-semidefinite data operator is
  // (A* - A)/(2i) rather than its negative.
  OperatorMatrix out;
  const cplx two_i(0.0, 2.0);
  out.entries = (a.entries.adjoint() - a.entries).eval() / two_i;
  // kill Hermitian roundoff exactly
  out.entries = ((out.entries + out.entries.adjoint()) / 2.0).eval();
  out.tag = MatrixTag::kImaginaryPart;
  return out;
}

SvdFactors svd(const OperatorMatrix& a) {
  if (!a.entries.allFinite()) {
    throw NumericalError("matrix has non-finite entries");
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> dec(a.entries,
                                      Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (dec.info() != Eigen::Success) {
    throw NumericalError("singular value decomposition failed to converge");
  }
  SvdFactors out;
  out.singular_values = dec.singularValues();
  out.left_vectors = dec.matrixU();
  out.right_vectors = dec.matrixV();
  return out;
}

void write_matrix_csv(const OperatorMatrix& a, std::ostream& out) {
  const int m = a.size();
  out << "# eit-rfm matrix M=" << m << " mode=" << tag_name(a.tag) << "\n";
  char buf[64];
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) {
      const cplx v = a.entries(j, k);
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", v.real(), v.imag());
      out << buf;
    }
  }
}

void write_matrix_csv(const OperatorMatrix& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  write_matrix_csv(a, out);
}

}  // namespace eitrfm
