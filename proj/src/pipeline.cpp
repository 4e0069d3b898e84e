#include "eitrfm/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace eitrfm {

void ExperimentConfig::validate() const {
  BoundaryParams{gamma, mu}.validate(mode);
  DiskGeometry{rho}.validate();
  TruncationOrder{n_max}.validate();
  FilterSpec{alpha}.validate();
  if (delta < 0.0) {
    throw ValidationError("noise level delta must be nonnegative");
  }
  if (!(p > 0.0)) {
    throw ValidationError("decay parameter p must be positive");
  }
  if (m_grid < 2 * n_max + 1) {
    throw ValidationError("m_grid must be >= 2*n_max + 1");
  }
  if (grid_n < 8) {
    throw ValidationError("grid_n must be >= 8");
  }
  if (!(threshold > 0.0) || threshold > 1.0) {
    throw ValidationError("threshold must lie in (0, 1]");
  }
  if (!(r_max > 0.0) || r_max > 1.0) {
    throw ValidationError("r_max must lie in (0, 1]");
  }
}

std::optional<ExperimentConfig> preset(const std::string& name) {
  ExperimentConfig c;
  if (name == "fig1") {
    c.mode = CoefficientMode::kComplex;
    c.rho = 0.2;
    c.gamma = {2.0, -0.5};
    c.mu = {0.1, -1.0};
    c.delta = 0.05;
    c.alpha = 1e-17;
    c.p = 1.0;
    c.threshold = 0.2;
  } else if (name == "fig2") {
    c.mode = CoefficientMode::kComplex;
    c.rho = 0.7;
    c.gamma = {2.0, -3.0};
    c.mu = {1.0, -4.0};
    c.delta = 0.1;
    c.alpha = 1e-4;
    c.p = 1.0;
    c.threshold = 0.2;
  } else if (name == "fig3") {
    c.mode = CoefficientMode::kReal;
    c.rho = 0.25;
    c.gamma = {1.2, 0.0};
    c.mu = {0.5, 0.0};
    c.delta = 0.05;
    c.alpha = 1e-15;
    c.p = 4.0;
    c.threshold = 0.1;
  } else if (name == "fig4") {
    c.mode = CoefficientMode::kReal;
    c.rho = 0.75;
    c.gamma = {0.6, 0.0};
    c.mu = {1.6, 0.0};
    c.delta = 0.1;
    c.alpha = 1e-5;
    c.p = 4.0;
    c.threshold = 0.07;
  } else {
    return std::nullopt;
  }
  return c;
}

double separation_statistic(const IndicatorField& field, double rho) {
  const double r_in = rho / 2.0;
  const double r_out = std::min(rho + 0.3, 0.9);
  double sum_in = 0.0, sum_out = 0.0;
  int n_in = 0, n_out = 0;
  for (int row = 0; row < field.grid_n; ++row) {
    for (int col = 0; col < field.grid_n; ++col) {
      const double w = field.w(row, col);
      if (std::isnan(w)) {
        continue;
      }
      const double r = std::hypot(field.cell_x(col), field.cell_y(row));
      if (r <= r_in) {
        sum_in += w;
        ++n_in;
      } else if (r >= r_out) {
        sum_out += w;
        ++n_out;
      }
    }
  }
  if (n_in == 0 || n_out == 0) {
    throw ValidationError("separation statistic needs points in both regions");
  }
  return (sum_in / n_in) / (sum_out / n_out);
}

RunReport run(const ExperimentConfig& config, IndicatorField* field_out) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();

  const BoundaryParams params{config.gamma, config.mu};
  const DiskGeometry geom{config.rho};
  const TruncationOrder trunc{config.n_max};

  OperatorMatrix a = kernel_matrix(params, geom, trunc, config.m_grid);
  a = add_noise(a, NoiseModel{config.delta, config.seed});
  if (config.mode == CoefficientMode::kComplex) {
    a = imaginary_part(a);
  }
  const SvdFactors factors = svd(a);
  const FilterSpec filter{config.alpha};
  const IndicatorField field =
      scan(factors, config.grid_n, filter, config.p, config.r_max);
  const LevelSet ls = level_set(field, config.threshold);

  RunReport report;
  report.config = config;
  report.sigma_max = factors.singular_values(0);
  report.sigma_min = factors.singular_values(factors.singular_values.size() - 1);
  report.passing_filter = 0;
  for (int j = 0; j < factors.singular_values.size(); ++j) {
    const double s = factors.singular_values(j);
    if (s * s >= config.alpha) {
      ++report.passing_filter;
    }
  }
  report.r_est = ls.r_est;
  report.separation = separation_statistic(field, config.rho);

  if (!config.out_csv.empty()) {
    export_field_csv(field, config.out_csv);
  }
  if (!config.out_pgm.empty()) {
    export_field_pgm(field, config.out_pgm);
  }
  if (field_out != nullptr) {
    *field_out = field;
  }
  report.wall_time_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

void export_field_csv(const IndicatorField& field, std::ostream& out) {
  bool any = false;
  out << "x,y,w\n";
  char buf[96];
  for (int row = 0; row < field.grid_n; ++row) {
    for (int col = 0; col < field.grid_n; ++col) {
      const double w = field.w(row, col);
      if (std::isnan(w)) {
        continue;
      }
      any = true;
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", field.cell_x(col),
                    field.cell_y(row), w);
      out << buf;
    }
  }
  if (!any) {
    throw ValidationError("cannot export an empty indicator field");
  }
}

void export_field_csv(const IndicatorField& field, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  export_field_csv(field, out);
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

void export_field_pgm(const IndicatorField& field, const std::string& path) {
  if ((field.w.array() == field.w.array()).count() == 0) {
    throw ValidationError("cannot export an empty indicator field");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << "P5\n" << field.grid_n << " " << field.grid_n << "\n255\n";
  for (int row = 0; row < field.grid_n; ++row) {
    for (int col = 0; col < field.grid_n; ++col) {
      const double w = field.w(row, col);
      const unsigned char px =
          std::isnan(w) ? 0 : static_cast<unsigned char>(std::lround(255.0 * w));
      out.put(static_cast<char>(px));
    }
  }
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

void write_report(const RunReport& report, std::ostream& out) {
  const ExperimentConfig& c = report.config;
  out << "mode=" << (c.mode == CoefficientMode::kComplex ? "complex" : "real") << "\n"
      << "rho=" << c.rho << "\n"
      << "gamma=" << c.gamma.real() << (c.gamma.imag() < 0 ? "" : "+") << c.gamma.imag()
      << "i\n"
      << "mu=" << c.mu.real() << (c.mu.imag() < 0 ? "" : "+") << c.mu.imag() << "i\n"
      << "delta=" << c.delta << "\n"
      << "alpha=" << c.alpha << "\n"
      << "p=" << c.p << "\n"
      << "n_max=" << c.n_max << "\n"
      << "m_grid=" << c.m_grid << "\n"
      << "grid_n=" << c.grid_n << "\n"
      << "seed=" << c.seed << "\n"
      << "threshold=" << c.threshold << "\n"
      << "r_max=" << c.r_max << "\n"
      << "sigma_max=" << report.sigma_max << "\n"
      << "sigma_min=" << report.sigma_min << "\n"
      << "passing_filter=" << report.passing_filter << "\n"
      << "r_est=" << report.r_est << "\n"
      << "separation=" << report.separation << "\n"
      << "wall_time_sec=" << report.wall_time_sec << "\n";
}

}  // namespace eitrfm
