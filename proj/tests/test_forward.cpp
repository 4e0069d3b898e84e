#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "eitrfm/forward.hpp"

using eitrfm::BoundaryParams;
using eitrfm::cplx;
using eitrfm::DiskGeometry;
using eitrfm::OperatorMatrix;
using eitrfm::TruncationOrder;

namespace {

// Independent route to sigma_n: evaluate the mode-n series coefficients
//   a_n = (gamma rho^2n + 2n rho^n + mu n^2) / d_n
//   b_n = -rho^2n (gamma rho^2n + mu n^2) / d_n
//   d_n = mu n^2 + 2n rho^n + gamma rho^2n (1 - rho^2n) - mu n^2 rho^2n
// for unit voltage and read off sigma_n = a_n - b_n from the boundary current.
cplx sigma_n_oracle(int n, const BoundaryParams& prm, const DiskGeometry& geom) {
  const double an = std::abs(n);
  const double rn = std::pow(geom.rho, an);
  const double r2n = rn * rn;
  const cplx mu_n2 = prm.mu * an * an;
  const cplx d = mu_n2 + 2.0 * an * rn + prm.gamma * r2n * (1.0 - r2n) - mu_n2 * r2n;
  const cplx a_coef = (prm.gamma * r2n + 2.0 * an * rn + mu_n2) / d;
  const cplx b_coef = -r2n * (prm.gamma * r2n + mu_n2) / d;
  return a_coef - b_coef;
}

Eigen::VectorXcd sampled_mode(int n, int m) {
  Eigen::VectorXcd f(m);
  for (int j = 0; j < m; ++j) {
    const double theta = 2.0 * M_PI * j / m;
    f(j) = std::exp(cplx(0.0, n * theta));
  }
  return f;
}

}  // namespace

TEST_CASE("sigma0 closed form") {
  const DiskGeometry geom{0.2};
  CHECK(eitrfm::sigma0({{2.0, 0.0}, {1.0, 0.0}}, geom).real() ==
        doctest::Approx(0.24334228215840849).epsilon(1e-13));
  CHECK(eitrfm::sigma0({{2.0, 0.0}, {1.0, 0.0}}, geom).imag() == 0.0);

  // gamma -> 0 limit
  const cplx tiny = eitrfm::sigma0({{1e-12, 0.0}, {1.0, 0.0}}, DiskGeometry{0.5});
  CHECK(std::abs(tiny) == doctest::Approx(5e-13).epsilon(1e-3));

  // complex regression constant
  const cplx s = eitrfm::sigma0({{2.0, -0.5}, {0.1, -1.0}}, geom);
  CHECK(s.real() == doctest::Approx(0.24693152973086882).epsilon(1e-13));
  CHECK(s.imag() == doctest::Approx(-0.036658239345370238).epsilon(1e-13));
}

TEST_CASE("sigma_n closed form and symmetry") {
  const BoundaryParams prm{{1.2, 0.0}, {0.5, 0.0}};
  const DiskGeometry geom{0.25};
  const cplx s1 = eitrfm::sigma_n(1, prm, geom);
  CHECK(s1.real() == doctest::Approx(1.0691729323308271).epsilon(1e-13));
  CHECK(eitrfm::sigma_n(-1, prm, geom) == s1);
  for (int n : {1, 2, 5, 9}) {
    CHECK(eitrfm::sigma_n(-n, prm, geom) == eitrfm::sigma_n(n, prm, geom));
  }
}

TEST_CASE("sigma_n degenerates to 1 for vanishing coefficients") {
  // outside the admissible set, formal check of the quotient only
  const BoundaryParams zero{{0.0, 0.0}, {0.0, 0.0}};
  for (int n = 1; n <= 6; ++n) {
    CHECK(std::abs(eitrfm::sigma_n(n, zero, DiskGeometry{0.3}) - 1.0) < 1e-14);
  }
  // rho -> 0
  const cplx s = eitrfm::sigma_n(1, {{1.0, 0.0}, {1.0, 0.0}}, DiskGeometry{1e-8});
  CHECK(std::abs(s - 1.0) < 1e-6);
}

TEST_CASE("sigma_n matches the per-mode linear-solve oracle") {
  const BoundaryParams sets[] = {
      {{2.0, -0.5}, {0.1, -1.0}}, {{2.0, -3.0}, {1.0, -4.0}},
      {{1.2, 0.0}, {0.5, 0.0}},   {{0.6, 0.0}, {1.6, 0.0}}};
  const double rhos[] = {0.2, 0.7, 0.25, 0.75};
  for (int i = 0; i < 4; ++i) {
    const DiskGeometry geom{rhos[i]};
    for (int n = 1; n <= 10; ++n) {
      const cplx expected = sigma_n_oracle(n, sets[i], geom);
      const cplx got = eitrfm::sigma_n(n, sets[i], geom);
      CHECK(std::abs(got - expected) < 1e-12 * std::abs(expected));
    }
  }
}

TEST_CASE("sigma_n approaches 1 geometrically") {
  const BoundaryParams prm{{2.0, -3.0}, {1.0, -4.0}};
  const DiskGeometry geom{0.7};
  const double bound = geom.rho * geom.rho * 1.2;
  for (int n = 5; n <= 15; ++n) {
    const double d1 = std::abs(eitrfm::sigma_n(n, prm, geom) - 1.0);
    const double d2 = std::abs(eitrfm::sigma_n(n + 1, prm, geom) - 1.0);
    CHECK(d2 / d1 <= bound);
  }
}

TEST_CASE("kernel matrix acts diagonally on sampled Fourier modes") {
  const BoundaryParams prm{{2.0, -0.5}, {0.1, -1.0}};
  const DiskGeometry geom{0.2};
  const TruncationOrder trunc{10};
  const int m = 64;
  const OperatorMatrix a = kernel_matrix(prm, geom, trunc, m);

  // high modes have eigenvalues near the roundoff floor of the matrix scale,
  // so residuals are measured against max(|lambda|, ||A||_2)
  const double a_norm = a.entries.jacobiSvd().singularValues()(0);
  for (int n = -10; n <= 10; ++n) {
    if (n == 0) continue;
    const Eigen::VectorXcd f = sampled_mode(n, m);
    const cplx lambda =
        static_cast<double>(std::abs(n)) * (eitrfm::sigma_n(n, prm, geom) - 1.0);
    const Eigen::VectorXcd err = a.entries * f - lambda * f;
    CHECK(err.norm() <= 1e-12 * std::max(std::abs(lambda), a_norm) * f.norm());
  }

  const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(m);
  const cplx s0 = eitrfm::sigma0(prm, geom);
  CHECK((a.entries * ones - s0 * ones).norm() <= 1e-12 * std::abs(s0) * ones.norm());
}

TEST_CASE("real coefficients give a real symmetric matrix") {
  const OperatorMatrix a =
      kernel_matrix({{1.2, 0.0}, {0.5, 0.0}}, DiskGeometry{0.25}, TruncationOrder{10}, 64);
  CHECK(a.tag == eitrfm::MatrixTag::kRealCase);
  CHECK(a.entries.imag().cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((a.entries - a.entries.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("circulant structure") {
  const OperatorMatrix a =
      kernel_matrix({{2.0, -3.0}, {1.0, -4.0}}, DiskGeometry{0.7}, TruncationOrder{10}, 64);
  const int m = a.size();
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      CHECK(std::abs(a.entries(j, k) - a.entries((j + 1) % m, (k + 1) % m)) <= 1e-15);
    }
  }
}

TEST_CASE("DFT of the first row recovers the symbols") {
  const BoundaryParams prm{{2.0, -0.5}, {0.1, -1.0}};
  const DiskGeometry geom{0.2};
  const int m = 64, n_max = 10;
  const OperatorMatrix a = kernel_matrix(prm, geom, TruncationOrder{n_max}, m);

  // hat(c)_n = sum_k c_k e^{i n 2 pi k / m} for first row c_k = A[0,k]
  const double scale = std::abs(eitrfm::sigma0(prm, geom));
  for (int n = -m / 2 + 1; n <= m / 2; ++n) {
    cplx hat = 0.0;
    for (int k = 0; k < m; ++k) {
      hat += a.entries(0, k) * std::exp(cplx(0.0, n * 2.0 * M_PI * k / m));
    }
    cplx expected = 0.0;
    if (n == 0) {
      expected = eitrfm::sigma0(prm, geom);
    } else if (std::abs(n) <= n_max) {
      expected = static_cast<double>(std::abs(n)) * (eitrfm::sigma_n(n, prm, geom) - 1.0);
    }
    CHECK(std::abs(hat - expected) <= 1e-12 * std::max(scale, std::abs(expected)));
  }
}

TEST_CASE("truncation error decays geometrically") {
  const BoundaryParams prm{{2.0, -3.0}, {1.0, -4.0}};
  const DiskGeometry geom{0.7};
  const int m = 64;
  auto defect_norm = [&](int n_trunc) {
    const Eigen::MatrixXcd d =
        kernel_matrix(prm, geom, TruncationOrder{n_trunc}, m).entries -
        kernel_matrix(prm, geom, TruncationOrder{2 * n_trunc}, m).entries;
    return d.jacobiSvd().singularValues()(0);
  };
  const double bound = geom.rho * geom.rho * 1.2;
  double prev = defect_norm(4);
  for (int n_trunc = 5; n_trunc <= 8; ++n_trunc) {
    const double cur = defect_norm(n_trunc);
    CHECK(cur / prev <= bound);
    prev = cur;
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(DiskGeometry{1.0}.validate(), eitrfm::ValidationError);
  CHECK_THROWS_AS(DiskGeometry{0.0}.validate(), eitrfm::ValidationError);
  CHECK_THROWS_AS(TruncationOrder{0}.validate(), eitrfm::ValidationError);
  CHECK_THROWS_AS(BoundaryParams({-1.0, 0.0}, {1.0, 0.0}).validate(eitrfm::CoefficientMode::kReal),
                  eitrfm::ValidationError);
  CHECK_THROWS_AS(BoundaryParams({2.0, 0.5}, {1.0, -1.0}).validate(eitrfm::CoefficientMode::kComplex),
                  eitrfm::ValidationError);
  // grid too coarse for the truncation order
  CHECK_THROWS_AS(
      kernel_matrix({{1.0, 0.0}, {1.0, 0.0}}, DiskGeometry{0.3}, TruncationOrder{10}, 20),
      eitrfm::ValidationError);
  CHECK_THROWS_AS(eitrfm::sigma_n(0, {{1.0, 0.0}, {1.0, 0.0}}, DiskGeometry{0.3}),
                  eitrfm::ValidationError);
}
