#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eitrfm/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Regularized factorization method for delamination imaging on the unit disk"};

  std::string preset_name;
  std::string mode_str;
  double rho = -1.0, gamma_re = 0.0, gamma_im = 0.0, mu_re = 0.0, mu_im = 0.0;
  double delta = -1.0, alpha = -1.0, p = -1.0, threshold = -1.0, r_max = -1.0;
  int n_max = -1, m_grid = -1, grid_n = -1;
  std::int64_t seed = -1;
  std::string out_csv, out_pgm;

  app.add_option("--preset", preset_name, "Built-in parameter set: fig1, fig2, fig3, fig4");
  app.add_option("--mode", mode_str, "Coefficient mode: complex or real");
  app.add_option("--rho", rho, "Defect radius in (0,1)");
  app.add_option("--gamma-re", gamma_re, "Re(gamma)");
  app.add_option("--gamma-im", gamma_im, "Im(gamma)");
  app.add_option("--mu-re", mu_re, "Re(mu)");
  app.add_option("--mu-im", mu_im, "Im(mu)");
  app.add_option("--delta", delta, "Relative noise level");
  app.add_option("--alpha", alpha, "Spectral cut-off parameter");
  app.add_option("--p", p, "Decay exponent of the imaging functional");
  app.add_option("--nmax", n_max, "Kernel truncation order (default 10)");
  app.add_option("--mgrid", m_grid, "Boundary collocation points (default 64)");
  app.add_option("--grid", grid_n, "Sampling grid resolution (default 128)");
  app.add_option("--seed", seed, "Noise RNG seed (default 0)");
  app.add_option("--threshold", threshold, "Level-curve threshold");
  app.add_option("--rmax", r_max, "Sampling exclusion radius (default 0.95)");
  app.add_option("--out-csv", out_csv, "Write the indicator field as CSV");
  app.add_option("--out-pgm", out_pgm, "Write the indicator field as 8-bit PGM");

  CLI11_PARSE(app, argc, argv);

  eitrfm::ExperimentConfig config;
  if (!preset_name.empty()) {
    auto pc = eitrfm::preset(preset_name);
    if (!pc) {
      std::cerr << "error: unknown preset '" << preset_name << "'\n";
      return 1;
    }
    config = *pc;
  } else if (mode_str.empty()) {
    std::cerr << "error: either --preset or --mode is required\n";
    return 1;
  }

  // explicit flags override preset fields
  if (!mode_str.empty()) {
    if (mode_str == "complex") {
      config.mode = eitrfm::CoefficientMode::kComplex;
    } else if (mode_str == "real") {
      config.mode = eitrfm::CoefficientMode::kReal;
      // stale complex defaults would fail validation below
      if (!app.count("--gamma-im")) config.gamma = {config.gamma.real(), 0.0};
      if (!app.count("--mu-im")) config.mu = {config.mu.real(), 0.0};
    } else {
      std::cerr << "error: --mode must be 'complex' or 'real'\n";
      return 1;
    }
  }
  if (rho >= 0.0) config.rho = rho;
  if (app.count("--gamma-re") || app.count("--gamma-im")) {
    config.gamma = {app.count("--gamma-re") ? gamma_re : config.gamma.real(),
                    app.count("--gamma-im") ? gamma_im : config.gamma.imag()};
  }
  if (app.count("--mu-re") || app.count("--mu-im")) {
    config.mu = {app.count("--mu-re") ? mu_re : config.mu.real(),
                 app.count("--mu-im") ? mu_im : config.mu.imag()};
  }
  if (delta >= 0.0) config.delta = delta;
  if (alpha >= 0.0) config.alpha = alpha;
  if (p >= 0.0) config.p = p;
  if (n_max >= 0) config.n_max = n_max;
  if (m_grid >= 0) config.m_grid = m_grid;
  if (grid_n >= 0) config.grid_n = grid_n;
  if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);
  if (threshold >= 0.0) config.threshold = threshold;
  if (r_max >= 0.0) config.r_max = r_max;
  config.out_csv = out_csv;
  config.out_pgm = out_pgm;

  try {
    const eitrfm::RunReport report = eitrfm::run(config);
    eitrfm::write_report(report, std::cout);
  } catch (const eitrfm::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const eitrfm::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
