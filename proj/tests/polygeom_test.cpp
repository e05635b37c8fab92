#include <cmath>
#include <numbers>
#include <random>

#include "cornerindex/domains.hpp"
#include "cornerindex/errors.hpp"
#include "cornerindex/polygeom.hpp"
#include "doctest.h"

using namespace cornerindex;
using polygeom::PolygonalDomain;

namespace {

constexpr double kPi = std::numbers::pi;

double shoelace(const polygeom::Loop& l) {
  double s = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto& a = l[i];
    const auto& b = l[(i + 1) % l.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return 0.5 * s;
}

// Interior angle at l[i] of a loop whose material lies to the left.
double left_angle(const polygeom::Loop& l, std::size_t i) {
  const auto& p = l[(i + l.size() - 1) % l.size()];
  const auto& q = l[i];
  const auto& r = l[(i + 1) % l.size()];
  const double turn = std::atan2((q.x - p.x) * (r.y - q.y) - (q.y - p.y) * (r.x - q.x),
                                 (q.x - p.x) * (r.x - q.x) + (q.y - p.y) * (r.y - q.y));
  return kPi - turn;
}

}  // namespace

TEST_SUITE("polygeom") {
  TEST_CASE("Euler characteristics of the named domains") {
    CHECK(polygeom::euler_characteristic(domains::corner_annulus()) == 0);
    CHECK(polygeom::euler_characteristic(domains::unit_square()) == 1);
    CHECK(polygeom::euler_characteristic(domains::pentagon_domain()) == 0);
    CHECK(polygeom::euler_characteristic(domains::triangle_domain()) == 0);
    CHECK(polygeom::euler_characteristic(domains::pentagon_domain_notched()) == -1);
    CHECK(polygeom::euler_characteristic(domains::triangle_domain_notched()) == -1);
  }

  TEST_CASE("corner annulus area and angles") {
    const auto a = domains::corner_annulus();
    CHECK(polygeom::area(a) == doctest::Approx(12.0).epsilon(1e-15));
    const auto corners = polygeom::interior_angles(a);
    REQUIRE(corners.size() == 8);
    int right = 0, reentrant = 0;
    for (const auto& c : corners) {
      if (std::abs(c.interior_angle - kPi / 2) < 1e-14) ++right;
      if (std::abs(c.interior_angle - 3 * kPi / 2) < 1e-14) {
        ++reentrant;
        CHECK(c.on_hole);
        CHECK(std::abs(c.position.x) == doctest::Approx(1.0));
        CHECK(c.half_angle() == doctest::Approx(3 * kPi / 4));
      }
    }
    CHECK(right == 4);
    CHECK(reentrant == 4);
  }

  TEST_CASE("angles and areas match an independent computation") {
    for (const auto& d : {domains::corner_annulus(), domains::pentagon_domain_notched(),
                          domains::triangle_domain_notched()}) {
      double area = shoelace(d.outer);
      for (const auto& h : d.holes) area += shoelace(h);
      CHECK(polygeom::area(d) == doctest::Approx(area).epsilon(1e-14));
      const auto corners = polygeom::interior_angles(d);
      for (const auto& c : corners) {
        // Holes run clockwise, so their material also lies to the left.
        CHECK(c.interior_angle == doctest::Approx(left_angle(d.loop(c.loop), c.index)).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("property: total turning equals 2 pi chi for random polygons with holes") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
      PolygonalDomain d;
      const int n = 3 + static_cast<int>(u(rng) * 9);
      d.outer = domains::regular_polygon(n, 10.0, {0.0, 0.0}, u(rng));
      const int holes = static_cast<int>(u(rng) * 4);
      for (int k = 0; k < holes; ++k) {
        auto h = domains::regular_polygon(3 + static_cast<int>(u(rng) * 5), 1.0,
                                          {-4.5 + 3.0 * k, 0.5 * u(rng)}, u(rng));
        std::reverse(h.begin(), h.end());
        d.holes.push_back(h);
      }
      REQUIRE_NOTHROW(polygeom::validate(d));
      const int chi = polygeom::euler_characteristic(d);
      CHECK(chi == 1 - holes);
      double total = 0.0;
      for (std::size_t l = 0; l < d.loop_count(); ++l) total += polygeom::loop_turning(d, l);
      CHECK(total == doctest::Approx(2 * kPi * chi).epsilon(1e-12));
    }
  }

  TEST_CASE("property: rigid motions preserve area, angles and chi") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const auto base = domains::pentagon_domain_notched();
    const auto angles = polygeom::interior_angles(base);
    for (int trial = 0; trial < 20; ++trial) {
      const auto moved = polygeom::rigid_motion(base, u(rng), {u(rng), u(rng)});
      CHECK(polygeom::area(moved) == doctest::Approx(polygeom::area(base)).epsilon(1e-13));
      CHECK(polygeom::euler_characteristic(moved) == -1);
      const auto a2 = polygeom::interior_angles(moved);
      REQUIRE(a2.size() == angles.size());
      for (std::size_t i = 0; i < a2.size(); ++i)
        CHECK(a2[i].interior_angle == doctest::Approx(angles[i].interior_angle).epsilon(1e-12));
    }
  }

  TEST_CASE("invalid domains are rejected") {
    PolygonalDomain bowtie;
    bowtie.outer = {{0, 0}, {2, 0}, {2, 2}, {1, -1}, {0, 2}};
    CHECK(polygeom::signed_area(bowtie.outer) > 0.0);
    CHECK_THROWS_AS(polygeom::validate(bowtie), ValidationError);

    PolygonalDomain clockwise;
    clockwise.outer = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    CHECK_THROWS_AS(polygeom::validate(clockwise), ValidationError);

    auto outside = domains::unit_square();
    outside.holes.push_back({{2.0, 2.0}, {2.0, 2.5}, {2.5, 2.5}, {2.5, 2.0}});
    CHECK_THROWS_AS(polygeom::validate(outside), ValidationError);
  }

  TEST_CASE("containment and boundary distance on A") {
    const auto a = domains::corner_annulus();
    CHECK(polygeom::contains_strictly(a, {1.5, 0.0}));
    CHECK_FALSE(polygeom::contains_strictly(a, {0.0, 0.0}));
    CHECK_FALSE(polygeom::contains_strictly(a, {2.0, 0.0}));
    CHECK(polygeom::boundary_distance(a, {1.5, 0.0}) == doctest::Approx(0.5));
    CHECK(polygeom::boundary_distance(a, {1.25, 1.75}) == doctest::Approx(0.25));
  }

  TEST_CASE("corner turning against the arc geometry") {
    // A tangent circular arc of radius R turns by pi - theta, with curvature
    // sign given by convexity; its absolute turning is |pi - theta|.
    for (double theta : {kPi / 3, kPi / 2, 2 * kPi / 3, kPi, 5 * kPi / 4, 3 * kPi / 2}) {
      const auto r = polygeom::corner_turning_integrals(theta, 0.1, 10000);
      CHECK(std::abs(r.signed_turning - (kPi - theta)) <= 1e-8);
      CHECK(std::abs(r.absolute_turning - std::abs(kPi - theta)) <= 1e-8);
      CHECK(r.inequality_holds == (theta <= kPi));
    }
  }

  TEST_CASE("corner turning rejects radii that do not fit") {
    CHECK_THROWS_AS(polygeom::corner_turning_integrals(kPi / 2, 0.6, 100), GeometryError);
    CHECK_THROWS_AS(polygeom::corner_turning_integrals(kPi / 2, -0.1, 100), GeometryError);
  }
}
