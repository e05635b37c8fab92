#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "cornerindex/domains.hpp"
#include "cornerindex/errors.hpp"
#include "cornerindex/spectral.hpp"
#include "doctest.h"

using namespace cornerindex;
using Eigen::MatrixXd;
using spectral::SparseMatrix;

namespace {

constexpr double kPi = std::numbers::pi;

dec::HodgeSystem system_on(const polygeom::PolygonalDomain& d, double h, dec::BoundaryConditionSpec bc) {
  meshgen::TriangulateOptions o;
  o.h = h;
  return dec::assemble(meshgen::build_mesh(d, o), bc);
}

// Dense oracle: smallest generalized eigenvalues of the explicit pencil.
std::vector<double> dense_low(const MatrixXd& K, const MatrixXd& M, std::size_t m) {
  Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> es(K, M);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  v.resize(std::min(m, v.size()));
  return v;
}

MatrixXd dense_stiffness(const dec::HodgeSystem& s, int k) {
  const MatrixXd P = MatrixXd(s.prolongation(k));
  const MatrixXd D0 = MatrixXd(s.d0), D1 = MatrixXd(s.d1);
  const MatrixXd M0 = MatrixXd(s.mass[0]), M1 = MatrixXd(s.mass[1]), M2 = MatrixXd(s.mass[2]);
  MatrixXd K;
  if (k == 0) K = D0.transpose() * M1 * D0;
  if (k == 1) K = D1.transpose() * M2 * D1 + M1 * D0 * M0.inverse() * D0.transpose() * M1;
  if (k == 2) K = M2 * D1 * M1.inverse() * D1.transpose() * M2;
  return P.transpose() * K * P;
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("path graph Laplacian against its closed form") {
    const int n = 200;
    std::vector<Eigen::Triplet<double>> t;
    for (int i = 0; i < n; ++i) {
      t.emplace_back(i, i, (i == 0 || i == n - 1) ? 1.0 : 2.0);
      if (i + 1 < n) t.emplace_back(i, i + 1, -1.0), t.emplace_back(i + 1, i, -1.0);
    }
    SparseMatrix K(n, n), M(n, n);
    K.setFromTriplets(t.begin(), t.end());
    M.setIdentity();
    spectral::SolverOptions o;
    o.m = 5;
    const auto e = spectral::low_spectrum(K, M, o);
    REQUIRE(e.values.size() == 5);
    for (int k = 0; k < 5; ++k) {
      const double exact = 2.0 - 2.0 * std::cos(k * kPi / n);
      CHECK(std::abs(e.values[k] - exact) < 1e-10);
      CHECK(e.residuals[k] <= o.tol);
    }
    const MatrixXd gram = e.vectors.transpose() * e.vectors;
    CHECK((gram - MatrixXd::Identity(5, 5)).norm() < 1e-10);
  }

  TEST_CASE("generalized pencils agree with a dense solver") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    const int n = 120;
    std::vector<Eigen::Triplet<double>> tk, tm;
    for (int i = 0; i < n; ++i) {
      const double w = u(rng);
      tm.emplace_back(i, i, w);
      if (i + 1 < n) {
        const double c = u(rng);
        tk.emplace_back(i, i, c), tk.emplace_back(i + 1, i + 1, c);
        tk.emplace_back(i, i + 1, -c), tk.emplace_back(i + 1, i, -c);
      }
    }
    SparseMatrix K(n, n), M(n, n);
    K.setFromTriplets(tk.begin(), tk.end());
    M.setFromTriplets(tm.begin(), tm.end());
    spectral::SolverOptions o;
    o.m = 6;
    const auto e = spectral::low_spectrum(K, M, o);
    const auto ref = dense_low(MatrixXd(K), MatrixXd(M), 6);
    for (int k = 0; k < 6; ++k) CHECK(e.values[k] == doctest::Approx(ref[k]).scale(1.0).epsilon(1e-9));
  }

  TEST_CASE("Hodge Laplacian spectra on a coarse A agree with dense solves") {
    for (auto bc : {dec::BoundaryConditionSpec::maximal(), dec::BoundaryConditionSpec::minimal(0.2)}) {
      meshgen::TriangulateOptions o;
      o.h = 0.5;
      o.structured = true;
      const auto s = dec::assemble(meshgen::build_mesh(domains::corner_annulus(), o), bc);
      for (int k = 0; k < 3; ++k) {
        const auto pencil = dec::hodge_laplacian(s, k);
        const auto e = spectral::low_spectrum(pencil, {});
        const auto ref = dense_low(dense_stiffness(s, k), MatrixXd(pencil.mass), 6);
        for (std::size_t i = 0; i < ref.size(); ++i)
          CHECK(e.values[i] == doctest::Approx(ref[i]).scale(1.0).epsilon(1e-8));
      }
    }
  }

  TEST_CASE("Neumann eigenvalues of the unit square") {
    // -Laplace u = lambda u with du/dn = 0 on [0,1]^2: 0, pi^2, pi^2, 2 pi^2.
    const auto s = system_on(domains::unit_square(), 0.05, dec::BoundaryConditionSpec::maximal());
    spectral::SolverOptions o;
    o.m = 4;
    const auto e = spectral::low_spectrum(dec::hodge_laplacian(s, 0), o);
    CHECK(std::abs(e.values[0]) < 1e-9);
    CHECK(e.values[1] == doctest::Approx(kPi * kPi).epsilon(0.01));
    CHECK(e.values[2] == doctest::Approx(kPi * kPi).epsilon(0.01));
    CHECK(e.values[3] == doctest::Approx(2 * kPi * kPi).epsilon(0.01));
  }

  TEST_CASE("kernel rule") {
    auto k = spectral::kernel_dimension({1e-14, 0.3, 0.3, 1.0, 1.5, 2.6});
    REQUIRE_FALSE(k.ambiguous());
    CHECK(*k.count == 1);
    // Upper half {1.0, 1.5, 2.6} has median 1.5.
    CHECK(k.tau == doctest::Approx(1.5e-9));
    CHECK(k.gap_ratio == doctest::Approx(0.3 / 1.5e-9));

    k = spectral::kernel_dimension({0.5, 0.6, 0.7, 1.0, 1.5, 2.6});
    REQUIRE_FALSE(k.ambiguous());
    CHECK(*k.count == 0);

    // Nothing separates the small values from the rest.
    CHECK(spectral::kernel_dimension({1e-12, 1e-8, 1.0, 1.0, 1.0, 1.0}).ambiguous());
    // All values below the cutoff.
    CHECK(spectral::kernel_dimension({0.0, 0.0, 0.0, 0.0}).ambiguous());
  }

  TEST_CASE("property: kernel counts follow the planted multiplicity") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t zeros = static_cast<std::size_t>(trial % 4);
      std::vector<double> v;
      for (std::size_t i = 0; i < zeros; ++i) v.push_back(1e-16 * u(rng));
      while (v.size() < 8) v.push_back(u(rng));
      std::sort(v.begin(), v.end());
      const auto k = spectral::kernel_dimension(v);
      REQUIRE_FALSE(k.ambiguous());
      CHECK(*k.count == zeros);
    }
  }

  TEST_CASE("kernel dimensions of the Hodge Laplacian on A") {
    const auto max = system_on(domains::corner_annulus(), 0.2, dec::BoundaryConditionSpec::maximal());
    const std::size_t betti[3] = {1, 1, 0};
    for (int k = 0; k < 3; ++k) {
      const auto r = spectral::analyze(max, k);
      REQUIRE_FALSE(r.kernel.ambiguous());
      CHECK(*r.kernel.count == betti[k]);
      CHECK(r.kernel.gap_ratio >= 1e3);
      CHECK(r.max_residual <= 1e-8);
      CHECK(r.bc == "absolute/maximal");
    }
    const auto min = system_on(domains::corner_annulus(), 0.2, dec::BoundaryConditionSpec::minimal(0.1));
    const auto r = spectral::analyze(min, 1);
    REQUIRE_FALSE(r.kernel.ambiguous());
    CHECK(*r.kernel.count == 0);
    CHECK(r.rho == 0.1);
  }

  TEST_CASE("property: fixed seed gives identical spectra") {
    const auto s = system_on(domains::corner_annulus(), 0.4, dec::BoundaryConditionSpec::maximal());
    const auto pencil = dec::hodge_laplacian(s, 1);
    const auto a = spectral::low_spectrum(pencil, {});
    const auto b = spectral::low_spectrum(pencil, {});
    CHECK(a.values == b.values);
    CHECK(a.iterations == b.iterations);
  }

  TEST_CASE("iteration cap is reported as an error") {
    const auto s = system_on(domains::corner_annulus(), 0.4, dec::BoundaryConditionSpec::maximal());
    spectral::SolverOptions o;
    o.max_iterations = 1;
    o.tol = 1e-15;
    CHECK_THROWS_AS(spectral::low_spectrum(dec::hodge_laplacian(s, 1), o), SolverError);
  }
}
