#include <cmath>
#include <numbers>

#include "cornerindex/errors.hpp"
#include "cornerindex/oracles.hpp"
#include "doctest.h"

using namespace cornerindex;
using oracles::CapacityParams;

namespace {

constexpr double kPi = std::numbers::pi;

// Composite Simpson in s = log r of the polar energy density of
// f = 1 - eps^a r^-a over the sector of opening 2 beta.
double simpson_energy(const CapacityParams& p, int n = 20000) {
  const double a = std::log(p.epsilon), b = 0.0, h = (b - a) / n;
  auto g = [&](double s) {
    const double r = std::exp(s);
    const double dr = std::pow(p.epsilon, p.alpha) * p.alpha * std::pow(r, -p.alpha - 1);
    return dr * dr * 2 * p.beta * r * r;  // extra r from dr = r ds
  };
  double sum = g(a) + g(b);
  for (int i = 1; i < n; ++i) sum += g(a + i * h) * (i % 2 ? 4 : 2);
  return sum * h / 3;
}

// int_sector (1 - f)^2 worked out by hand: 1 on r < eps, eps^a r^-a beyond.
double exact_defect(const CapacityParams& p) {
  const double e = p.epsilon, a = p.alpha;
  return 2 * p.beta * (0.5 * e * e + std::pow(e, 2 * a) * (1 - std::pow(e, 2 - 2 * a)) / (2 - 2 * a));
}

}  // namespace

TEST_SUITE("oracles") {
  TEST_CASE("capacity energy: closed form, quadrature and an independent Simpson rule") {
    for (double alpha : {0.05, 0.1, 0.5})
      for (double eps : {1e-4, 1e-2, 0.25})
        for (double beta : {kPi / 4, 3 * kPi / 4}) {
          const CapacityParams p{alpha, eps, beta};
          const auto e = oracles::capacity_energy(p);
          CHECK(e.closed_form == doctest::Approx(beta * alpha * (1 - std::pow(eps, 2 * alpha))).epsilon(1e-15));
          CHECK(std::abs(e.quadrature - e.closed_form) <= 1e-8 * e.closed_form);
          CHECK(std::abs(simpson_energy(p) - e.closed_form) <= 1e-8 * e.closed_form);
        }
  }

  TEST_CASE("L2 defect against the hand-integrated value and the bound") {
    for (double alpha : {0.05, 0.1, 0.5})
      for (double eps : {1e-4, 1e-2, 0.25})
        for (double beta : {kPi / 4, 3 * kPi / 4}) {
          const CapacityParams p{alpha, eps, beta};
          const auto d = oracles::l2_defect(p);
          CHECK(d.quadrature == doctest::Approx(exact_defect(p)).epsilon(1e-10));
          CHECK(d.bound == doctest::Approx(beta * eps + beta * std::pow(eps, alpha)).epsilon(1e-15));
          CHECK(d.quadrature <= d.bound);
        }
  }

  TEST_CASE("schedule eps = alpha^(1/alpha) drives the H1 defect down") {
    for (double beta : {kPi / 4, 3 * kPi / 4}) {
      double prev = INFINITY;
      for (double alpha : {0.4, 0.2, 0.1, 0.05}) {
        const auto s = oracles::capacity_schedule(alpha, beta);
        CHECK(s.epsilon == doctest::Approx(std::pow(alpha, 1 / alpha)).epsilon(1e-12));
        CHECK(s.h1_defect_sq == doctest::Approx(s.energy + s.defect).epsilon(1e-15));
        CHECK(s.h1_defect_sq < prev);
        prev = s.h1_defect_sq;
      }
      CHECK(prev <= 2 * beta * 0.05 * 1.5);
    }
  }

  TEST_CASE("cutoff values") {
    const CapacityParams p{0.5, 0.25, kPi / 4};
    CHECK(oracles::cutoff(p, 0.1) == 0.0);
    CHECK(oracles::cutoff(p, 0.25) == doctest::Approx(0.0).scale(1.0));
    CHECK(oracles::cutoff(p, 1.0) == doctest::Approx(0.5));
  }

  TEST_CASE("invalid capacity parameters") {
    CHECK_THROWS_AS(oracles::capacity_energy({0.5, 0.0, kPi / 4}), ValidationError);
    CHECK_THROWS_AS(oracles::capacity_energy({0.5, 1.0, kPi / 4}), ValidationError);
    CHECK_THROWS_AS(oracles::capacity_energy({-0.1, 0.5, kPi / 4}), ValidationError);
    CHECK_THROWS_AS(oracles::capacity_energy({0.5, 0.5, 4.0}), ValidationError);
    CHECK_THROWS(oracles::capacity_schedule(1.5, kPi / 4));
  }

  TEST_CASE("integration over A") {
    // |A| = 16 - 4, int x^2 = 4 * 64/3 / 4 ... worked cell by cell:
    // int_[-2,2]^2 x^2 = 64/3, int_[-1,1]^2 x^2 = 4/3; x^2 y^2: 256/9 - 4/9.
    CHECK(oracles::integrate_annulus([](Point2) { return 1.0; }, {}, {}) == doctest::Approx(12.0).epsilon(1e-14));
    CHECK(oracles::integrate_annulus([](Point2 p) { return p.x * p.x; }, {}, {}) ==
          doctest::Approx(20.0).epsilon(1e-14));
    CHECK(oracles::integrate_annulus([](Point2 p) { return p.x * p.x * p.y * p.y; }, {}, {}) ==
          doctest::Approx(28.0).epsilon(1e-14));
    CHECK(std::abs(oracles::integrate_annulus([](Point2 p) { return p.x * p.y * p.y; }, {}, {})) < 1e-13);
  }

  TEST_CASE("property: integration by parts holds for compliant forms") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto f = oracles::random_compliant_form(seed);
      CHECK(f.bc_compliant);
      // Boundary conditions sampled along every edge of A.
      for (int i = 0; i <= 40; ++i) {
        const double t = -2.0 + 4.0 * i / 40, s = -1.0 + 2.0 * i / 40;
        for (double x : {-2.0, 2.0}) CHECK(std::abs(f.f({x, t})) < 1e-14);
        for (double y : {-2.0, 2.0}) CHECK(std::abs(f.g({t, y})) < 1e-14);
        for (double x : {-1.0, 1.0}) CHECK(std::abs(f.f({x, s})) < 1e-14);
        for (double y : {-1.0, 1.0}) CHECK(std::abs(f.g({s, y})) < 1e-14);
      }
      const auto b = oracles::bochner_identity(f);
      CHECK(b.rhs > 0.0);
      CHECK(std::abs(b.lhs - b.rhs) <= 1e-8 * (1 + b.rhs));
    }
    const auto z = oracles::bochner_identity(oracles::zero_form());
    CHECK(z.lhs == 0.0);
    CHECK(z.rhs == 0.0);
  }

  TEST_CASE("property: same seed, same form") {
    const auto a = oracles::random_compliant_form(3), b = oracles::random_compliant_form(3);
    const auto c = oracles::random_compliant_form(4);
    for (Point2 p : {Point2{1.5, 0.3}, Point2{-1.2, 1.7}, Point2{0.1, -1.4}}) {
      CHECK(a.f(p) == b.f(p));
      CHECK(a.g(p) == b.g(p));
    }
    CHECK(a.f({1.5, 0.3}) != c.f({1.5, 0.3}));
  }

  TEST_CASE("violating forms against hand computations") {
    const auto v = oracles::violating_forms();
    REQUIRE(v.size() == 3);
    // f = y, g = x: d w = 0, d* w = 0; |grad f|^2 + |grad g|^2 = 2 on |A| = 12.
    auto b = oracles::bochner_identity(v[0]);
    CHECK_FALSE(v[0].bc_compliant);
    CHECK(std::abs(b.lhs) <= 1e-12);
    CHECK(std::abs(b.rhs - 24.0) <= 1e-6);
    // f = y^3, g = x^3: lhs = 9 int (x^2 - y^2)^2 = 9 (2 * 252/5 - 2 * 28), rhs = 18 * 252/5.
    b = oracles::bochner_identity(v[1]);
    CHECK(b.lhs == doctest::Approx(9 * (2 * 252.0 / 5 - 2 * 28)).epsilon(1e-12));
    CHECK(b.rhs == doctest::Approx(18 * 252.0 / 5).epsilon(1e-12));
    // f = y (x + 3), g = x: lhs = int (x + 2)^2 + y^2 = 88, rhs = int y^2 + (x + 3)^2 + 1 = 160.
    b = oracles::bochner_identity(v[2]);
    CHECK(b.lhs == doctest::Approx(88.0).epsilon(1e-12));
    CHECK(b.rhs == doctest::Approx(160.0).epsilon(1e-12));
    CHECK(b.boundary_residual == doctest::Approx(-72.0).epsilon(1e-12));
  }
}
