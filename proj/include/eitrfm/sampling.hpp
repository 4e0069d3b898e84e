#pragma once

#include <vector>

#include <Eigen/Dense>

#include "eitrfm/data_ops.hpp"

namespace eitrfm {

/// Sampling point strictly inside the unit disk.
struct SamplePoint {
  double x = 0.0;
  double y = 0.0;

  double radius() const;
  double angle() const;  // atan2(y, x); defined as 0 at the origin
  void validate() const;
};

/// Spectral cut-off regularization: keep singular components with sigma^2 >= alpha.
struct FilterSpec {
  double alpha = 0.0;

  void validate() const;  // alpha > 0
};

struct IndicatorResult {
  double value = 0.0;
  bool empty_spectrum = false;  // no singular value passed the filter
};

/// Floor applied to the quadratic form before taking the reciprocal, so an
/// underflowed (but nonempty) spectrum cannot produce an infinite w_raw.
inline constexpr double kIndicatorFloor = 1e-300;

/// Sampled Poisson-kernel trace,
///   b_z[j] = -(1/2pi) (1 - r^2) / (r^2 + 1 - 2 r cos(theta_j - theta_z)).
/// All entries are real and strictly negative for r < 1.
Eigen::VectorXcd probe(const SamplePoint& z, int m_grid);

/// Regularized quadratic form
///   sum_j phi(sigma_j; alpha)^2 / sigma_j |u_j^* b|^2
/// with the spectral cut-off filter. Zero singular values never pass the filter.
IndicatorResult indicator(const SvdFactors& factors, const Eigen::VectorXcd& b,
                          const FilterSpec& filter);

/// Normalized imaging functional on a cell-centered grid_n x grid_n lattice
/// over [-1,1]^2. Row 0 is the top of the image (y = +1 side). Points with
/// |z| > r_max are absent (NaN).
struct IndicatorField {
  int grid_n = 0;
  double r_max = 0.0;
  double p = 1.0;
  Eigen::MatrixXd w_raw;  // reciprocal quadratic form; NaN where absent
  Eigen::MatrixXd w;      // |w_raw / max|^p in [0,1]; NaN where absent

  double cell_x(int col) const { return -1.0 + (col + 0.5) * 2.0 / grid_n; }
  double cell_y(int row) const { return 1.0 - (row + 0.5) * 2.0 / grid_n; }
};

/// Evaluates w_raw(z) = 1 / indicator(z) at every lattice point with |z| <= r_max
/// and normalizes w = |w_raw / max w_raw|^p. Throws NumericalError if any point
/// has an empty filtered spectrum (alpha exceeds the whole spectrum).
IndicatorField scan(const SvdFactors& factors, int grid_n, const FilterSpec& filter,
                    double p, double r_max = 0.95);

/// Thresholded point set {z : w(z) >= threshold} with its equivalent-area radius.
struct LevelSet {
  std::vector<SamplePoint> points;
  double r_est = 0.0;  // sqrt(area / pi), area = count * (2/grid_n)^2
};

LevelSet level_set(const IndicatorField& field, double threshold);

}  // namespace eitrfm
