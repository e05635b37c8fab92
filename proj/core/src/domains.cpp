#include "cornerindex/domains.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cornerindex/errors.hpp"

namespace cornerindex::domains {

namespace {

constexpr double kPi = std::numbers::pi;

Loop square_loop(double lo, double hi) { return {{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}}; }

Loop reversed(Loop loop) {
  std::reverse(loop.begin(), loop.end());
  return loop;
}

}  // namespace

Loop regular_polygon(int n, double circumradius, Point2 center, double start_angle) {
  Loop loop;
  loop.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double phi = start_angle + 2.0 * kPi * k / n;
    loop.push_back({center.x + circumradius * std::cos(phi), center.y + circumradius * std::sin(phi)});
  }
  return loop;
}

PolygonalDomain corner_annulus() {
  return {square_loop(-2.0, 2.0), {reversed(square_loop(-1.0, 1.0))}, "A"};
}

PolygonalDomain unit_square() { return {square_loop(0.0, 1.0), {}, "square"}; }

PolygonalDomain pentagon_domain(double circumradius) {
  return {square_loop(-2.0, 2.0),
          {reversed(regular_polygon(5, circumradius, {0.0, 0.0}, 0.5 * kPi))},
          "P"};
}

PolygonalDomain triangle_domain(double side) {
  const double circumradius = side / std::sqrt(3.0);
  return {square_loop(-2.0, 2.0),
          {reversed(regular_polygon(3, circumradius, {0.0, 0.0}, 0.5 * kPi))},
          "Q"};
}

Loop notch_hole(double notch_size) {
  // Equilateral triangle of diameter notch_size, apex up, its base 0.1
  // above the bottom edge y = -2.
  const double s = notch_size;
  const double base = -1.9;
  return reversed({{-0.5 * s, base}, {0.5 * s, base}, {0.0, base + 0.5 * std::sqrt(3.0) * s}});
}

PolygonalDomain pentagon_domain_notched(double circumradius, double notch_size) {
  PolygonalDomain d = pentagon_domain(circumradius);
  d.holes.push_back(notch_hole(notch_size));
  d.name = "P'";
  return d;
}

PolygonalDomain triangle_domain_notched(double side, double notch_size) {
  PolygonalDomain d = triangle_domain(side);
  d.holes.push_back(notch_hole(notch_size));
  d.name = "Q'";
  return d;
}

PolygonalDomain cone_sector(double half_angle, double radius, int arc_segments) {
  if (!(half_angle > 0.0 && half_angle < kPi))
    throw GeometryError("cone half-angle must lie in (0, pi)");
  if (arc_segments < 2) throw GeometryError("cone sector needs at least two arc segments");
  Loop loop{{0.0, 0.0}};
  for (int k = 0; k <= arc_segments; ++k) {
    const double phi = -half_angle + 2.0 * half_angle * k / arc_segments;
    loop.push_back({radius * std::cos(phi), radius * std::sin(phi)});
  }
  return {loop, {}, "sector"};
}

PolygonalDomain by_name(const std::string& name) {
  if (name == "A" || name == "annulus") return corner_annulus();
  if (name == "square") return unit_square();
  if (name == "P") return pentagon_domain();
  if (name == "Q") return triangle_domain();
  if (name == "P'" || name == "Pprime") return pentagon_domain_notched();
  if (name == "Q'" || name == "Qprime") return triangle_domain_notched();
  return read_domain_file(name);
}

}  // namespace cornerindex::domains
