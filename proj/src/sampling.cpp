#include "eitrfm/sampling.hpp"

#include <cmath>
#include <limits>

namespace eitrfm {

double SamplePoint::radius() const { return std::hypot(x, y); }

double SamplePoint::angle() const {
  if (x == 0.0 && y == 0.0) {
    return 0.0;
  }
  return std::atan2(y, x);
}

void SamplePoint::validate() const {
  if (!(radius() < 1.0)) {
    throw ValidationError("sampling point must lie strictly inside the unit disk");
  }
}

void FilterSpec::validate() const {
  if (!(alpha > 0.0)) {
    throw ValidationError("regularization parameter alpha must be positive");
  }
}

Eigen::VectorXcd probe(const SamplePoint& z, int m_grid) {
  z.validate();
  if (m_grid < 1) {
    throw ValidationError("probe grid size must be positive");
  }
  const double r = z.radius();
  const double theta_z = z.angle();
  const double num = -(1.0 - r * r) / (2.0 * M_PI);
  Eigen::VectorXcd b(m_grid);
  for (int j = 0; j < m_grid; ++j) {
    const double theta = 2.0 * M_PI * j / m_grid;
    b(j) = num / (r * r + 1.0 - 2.0 * r * std::cos(theta - theta_z));
  }
  return b;
}

IndicatorResult indicator(const SvdFactors& factors, const Eigen::VectorXcd& b,
                          const FilterSpec& filter) {
  filter.validate();
  const int n = static_cast<int>(factors.singular_values.size());
  IndicatorResult res;
  bool any = false;
  for (int j = 0; j < n; ++j) {
    const double s = factors.singular_values(j);
    if (s * s < filter.alpha) {
      continue;  // spectral cut-off; zero singular values never pass
    }
    any = true;
    const double coeff = std::norm(factors.left_vectors.col(j).dot(b));
    res.value += coeff / s;
  }
  res.empty_spectrum = !any;
  if (!any) {
    res.value = 0.0;
  }
  return res;
}

IndicatorField scan(const SvdFactors& factors, int grid_n, const FilterSpec& filter,
                    double p, double r_max) {
  filter.validate();
  if (grid_n < 8) {
    throw ValidationError("sampling grid is too coarse (grid_n must be >= 8)");
  }
  if (!(p > 0.0)) {
    throw ValidationError("decay parameter p must be positive");
  }
  if (!(r_max > 0.0) || r_max > 1.0) {
    throw ValidationError("r_max must lie in (0, 1]");
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  IndicatorField field;
  field.grid_n = grid_n;
  field.r_max = r_max;
  field.p = p;
  field.w_raw = Eigen::MatrixXd::Constant(grid_n, grid_n, nan);
  field.w = Eigen::MatrixXd::Constant(grid_n, grid_n, nan);

  const int m = static_cast<int>(factors.singular_values.size());
  double max_raw = 0.0;
  for (int row = 0; row < grid_n; ++row) {
    for (int col = 0; col < grid_n; ++col) {
      const SamplePoint z{field.cell_x(col), field.cell_y(row)};
      if (z.radius() > r_max) {
        continue;
      }
      const IndicatorResult ind = indicator(factors, probe(z, m), filter);
      if (ind.empty_spectrum) {
        throw NumericalError(
            "empty filtered spectrum: alpha exceeds every singular value squared");
      }
      const double raw = 1.0 / std::max(ind.value, kIndicatorFloor);
      field.w_raw(row, col) = raw;
      max_raw = std::max(max_raw, raw);
    }
  }
  if (max_raw == 0.0) {
    throw ValidationError("no grid point lies inside the sampling radius");
  }
  for (int row = 0; row < grid_n; ++row) {
    for (int col = 0; col < grid_n; ++col) {
      const double raw = field.w_raw(row, col);
      if (std::isnan(raw)) {
        continue;
      }
      field.w(row, col) = std::pow(raw / max_raw, p);
    }
  }
  return field;
}

LevelSet level_set(const IndicatorField& field, double threshold) {
  if (!(threshold > 0.0) || threshold > 1.0) {
    throw ValidationError("level-set threshold must lie in (0, 1]");
  }
  LevelSet out;
  for (int row = 0; row < field.grid_n; ++row) {
    for (int col = 0; col < field.grid_n; ++col) {
      const double w = field.w(row, col);
      if (!std::isnan(w) && w >= threshold) {
        out.points.push_back({field.cell_x(col), field.cell_y(row)});
      }
    }
  }
  const double cell_area = (2.0 / field.grid_n) * (2.0 / field.grid_n);
  out.r_est = std::sqrt(static_cast<double>(out.points.size()) * cell_area / M_PI);
  return out;
}

}  // namespace eitrfm
