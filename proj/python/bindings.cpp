#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eitrfm/pipeline.hpp"

namespace py = pybind11;
using namespace eitrfm;

namespace {

ExperimentConfig config_from_kwargs(const std::string& preset_name, const py::kwargs& kwargs) {
  ExperimentConfig c;
  if (!preset_name.empty()) {
    auto p = preset(preset_name);
    if (!p) throw ValidationError("unknown preset: " + preset_name);
    c = *p;
  }
  for (auto item : kwargs) {
    const std::string key = py::cast<std::string>(item.first);
    if (key == "mode") {
      const std::string m = py::cast<std::string>(item.second);
      if (m == "complex") c.mode = CoefficientMode::kComplex;
      else if (m == "real") c.mode = CoefficientMode::kReal;
      else throw ValidationError("mode must be 'complex' or 'real'");
    } else if (key == "rho") c.rho = py::cast<double>(item.second);
    else if (key == "gamma") c.gamma = py::cast<cplx>(item.second);
    else if (key == "mu") c.mu = py::cast<cplx>(item.second);
    else if (key == "delta") c.delta = py::cast<double>(item.second);
    else if (key == "alpha") c.alpha = py::cast<double>(item.second);
    else if (key == "p") c.p = py::cast<double>(item.second);
    else if (key == "n_max") c.n_max = py::cast<int>(item.second);
    else if (key == "m_grid") c.m_grid = py::cast<int>(item.second);
    else if (key == "grid_n") c.grid_n = py::cast<int>(item.second);
    else if (key == "seed") c.seed = py::cast<std::uint64_t>(item.second);
    else if (key == "threshold") c.threshold = py::cast<double>(item.second);
    else if (key == "r_max") c.r_max = py::cast<double>(item.second);
    else if (key == "out_csv") c.out_csv = py::cast<std::string>(item.second);
    else if (key == "out_pgm") c.out_pgm = py::cast<std::string>(item.second);
    else throw ValidationError("unknown config field: " + key);
  }
  return c;
}

}  // namespace

PYBIND11_MODULE(_eitrfm, m) {
  m.doc() = "Regularized factorization method for delamination imaging on the unit disk";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  m.def(
      "sigma0",
      [](cplx gamma, cplx mu, double rho) {
        return sigma0(BoundaryParams{gamma, mu}, DiskGeometry{rho});
      },
      py::arg("gamma"), py::arg("mu"), py::arg("rho"));

  m.def(
      "sigma_n",
      [](int n, cplx gamma, cplx mu, double rho) {
        return sigma_n(n, BoundaryParams{gamma, mu}, DiskGeometry{rho});
      },
      py::arg("n"), py::arg("gamma"), py::arg("mu"), py::arg("rho"));

  m.def(
      "kernel_matrix",
      [](cplx gamma, cplx mu, double rho, int n_max, int m_grid) {
        return kernel_matrix(BoundaryParams{gamma, mu}, DiskGeometry{rho},
                             TruncationOrder{n_max}, m_grid)
            .entries;
      },
      py::arg("gamma"), py::arg("mu"), py::arg("rho"), py::arg("n_max") = 10,
      py::arg("m_grid") = 64);

  m.def(
      "add_noise",
      [](const Eigen::MatrixXcd& a, double delta, std::uint64_t seed) {
        OperatorMatrix op;
        op.entries = a;
        return add_noise(op, NoiseModel{delta, seed}).entries;
      },
      py::arg("a"), py::arg("delta"), py::arg("seed") = 0);

  m.def("noise_matrix", &noise_matrix, py::arg("m"), py::arg("seed") = 0);

  m.def(
      "imaginary_part",
      [](const Eigen::MatrixXcd& a) {
        OperatorMatrix op;
        op.entries = a;
        return imaginary_part(op).entries;
      },
      py::arg("a"));

  m.def(
      "svd",
      [](const Eigen::MatrixXcd& a) {
        OperatorMatrix op;
        op.entries = a;
        const SvdFactors f = svd(op);
        return py::make_tuple(f.singular_values, f.left_vectors, f.right_vectors);
      },
      py::arg("a"), "Full SVD; returns (singular_values, left_vectors, right_vectors)");

  m.def(
      "probe",
      [](double x, double y, int m_grid) { return probe(SamplePoint{x, y}, m_grid); },
      py::arg("x"), py::arg("y"), py::arg("m_grid") = 64);

  m.def(
      "indicator",
      [](const Eigen::VectorXd& singular_values, const Eigen::MatrixXcd& left_vectors,
         const Eigen::VectorXcd& b, double alpha) {
        SvdFactors f;
        f.singular_values = singular_values;
        f.left_vectors = left_vectors;
        const IndicatorResult res = indicator(f, b, FilterSpec{alpha});
        return py::make_tuple(res.value, res.empty_spectrum);
      },
      py::arg("singular_values"), py::arg("left_vectors"), py::arg("b"), py::arg("alpha"),
      "Regularized quadratic form; returns (value, empty_spectrum)");

  m.def(
      "scan",
      [](const Eigen::VectorXd& singular_values, const Eigen::MatrixXcd& left_vectors,
         int grid_n, double alpha, double p, double r_max) {
        SvdFactors f;
        f.singular_values = singular_values;
        f.left_vectors = left_vectors;
        const IndicatorField field = scan(f, grid_n, FilterSpec{alpha}, p, r_max);
        return py::make_tuple(field.w, field.w_raw);
      },
      py::arg("singular_values"), py::arg("left_vectors"), py::arg("grid_n"),
      py::arg("alpha"), py::arg("p") = 1.0, py::arg("r_max") = 0.95,
      "Normalized imaging functional on the cell-centered grid; returns (w, w_raw). "
      "Absent points (outside r_max) are NaN; row 0 is the y = +1 side.");

  m.def(
      "run",
      [](const std::string& preset_name, const py::kwargs& kwargs) {
        const ExperimentConfig c = config_from_kwargs(preset_name, kwargs);
        IndicatorField field;
        const RunReport rep = run(c, &field);
        py::dict out;
        out["mode"] = (c.mode == CoefficientMode::kComplex) ? "complex" : "real";
        out["sigma_max"] = rep.sigma_max;
        out["sigma_min"] = rep.sigma_min;
        out["passing_filter"] = rep.passing_filter;
        out["r_est"] = rep.r_est;
        out["separation"] = rep.separation;
        out["wall_time_sec"] = rep.wall_time_sec;
        out["w"] = field.w;
        return out;
      },
      py::arg("preset") = "",
      "Full pipeline. Accepts a preset name (fig1..fig4) and/or config fields as "
      "keyword arguments (mode, rho, gamma, mu, delta, alpha, p, n_max, m_grid, "
      "grid_n, seed, threshold, r_max, out_csv, out_pgm).");

  m.def(
      "level_set",
      [](const Eigen::MatrixXd& w, double r_max, double threshold) {
        IndicatorField field;
        field.grid_n = static_cast<int>(w.rows());
        field.r_max = r_max;
        field.w = w;
        field.w_raw = w;
        const LevelSet ls = level_set(field, threshold);
        std::vector<std::pair<double, double>> pts;
        pts.reserve(ls.points.size());
        for (const SamplePoint& z : ls.points) {
          pts.emplace_back(z.x, z.y);
        }
        return py::make_tuple(pts, ls.r_est);
      },
      py::arg("w"), py::arg("r_max"), py::arg("threshold"),
      "Thresholded point set and equivalent-area radius; returns (points, r_est)");

  m.attr("__all__") =
      py::make_tuple("sigma0", "sigma_n", "kernel_matrix", "add_noise", "noise_matrix",
                     "imaginary_part", "svd", "probe", "indicator", "scan", "run",
                     "level_set", "ValidationError", "NumericalError");
}
