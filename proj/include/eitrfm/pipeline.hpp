#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "eitrfm/sampling.hpp"

namespace eitrfm {

/// Full configuration of one reconstruction experiment.
struct ExperimentConfig {
  CoefficientMode mode = CoefficientMode::kComplex;
  double rho = 0.2;
  cplx gamma{2.0, -0.5};
  cplx mu{0.1, -1.0};
  double delta = 0.05;
  double alpha = 1e-17;
  double p = 1.0;
  int n_max = 10;
  int m_grid = 64;
  int grid_n = 128;
  std::uint64_t seed = 0;
  double threshold = 0.2;
  double r_max = 0.95;
  std::string out_csv;  // empty = no file
  std::string out_pgm;

  void validate() const;
};

/// The four built-in parameter sets (complex and real coefficient experiments).
/// Known names: fig1, fig2, fig3, fig4.
std::optional<ExperimentConfig> preset(const std::string& name);

struct RunReport {
  ExperimentConfig config;
  double sigma_max = 0.0;       // largest singular value
  double sigma_min = 0.0;       // smallest singular value
  int passing_filter = 0;       // count with sigma^2 >= alpha
  double r_est = 0.0;
  double separation = 0.0;      // mean w inside rho/2 over mean w outside
  double wall_time_sec = 0.0;
};

/// Runs kernel_matrix -> add_noise -> (imaginary_part in complex mode) -> svd
/// -> scan -> level_set, writes any requested output files, and returns the report.
RunReport run(const ExperimentConfig& config, IndicatorField* field_out = nullptr);

/// Mean-w contrast between {|z| <= rho/2} and {|z| >= min(rho+0.3, 0.9)}.
double separation_statistic(const IndicatorField& field, double rho);

/// CSV rows `x,y,w` (absent points omitted) and an 8-bit PGM with
/// pixel = round(255 w), absent = 0, row 0 at y = +1.
void export_field_csv(const IndicatorField& field, std::ostream& out);
void export_field_csv(const IndicatorField& field, const std::string& path);
void export_field_pgm(const IndicatorField& field, const std::string& path);

/// Line-oriented key=value report text.
void write_report(const RunReport& report, std::ostream& out);

}  // namespace eitrfm
