#include "cornerindex/polygeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cornerindex/errors.hpp"
#include "cornerindex/quadrature.hpp"

namespace cornerindex {

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

double point_triangle_distance(Point2 p, Point2 a, Point2 b, Point2 c) {
  const double o1 = orient2d(a, b, p);
  const double o2 = orient2d(b, c, p);
  const double o3 = orient2d(c, a, p);
  const bool has_neg = o1 < 0 || o2 < 0 || o3 < 0;
  const bool has_pos = o1 > 0 || o2 > 0 || o3 > 0;
  if (!(has_neg && has_pos)) return 0.0;
  return std::min({point_segment_distance(p, a, b), point_segment_distance(p, b, c),
                   point_segment_distance(p, c, a)});
}

bool segments_cross_properly(Point2 a, Point2 b, Point2 c, Point2 d, double tol) {
  const double scale = std::max({norm(b - a), norm(d - c), 1e-300});
  const double t = tol * scale;
  const double d1 = orient2d(a, b, c) / norm(b - a);
  const double d2 = orient2d(a, b, d) / norm(b - a);
  const double d3 = orient2d(c, d, a) / norm(d - c);
  const double d4 = orient2d(c, d, b) / norm(d - c);
  return ((d1 > t && d2 < -t) || (d1 < -t && d2 > t)) &&
         ((d3 > t && d4 < -t) || (d3 < -t && d4 > t));
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d, double tol) {
  if (segments_cross_properly(a, b, c, d, 0.0)) return true;
  return point_segment_distance(a, c, d) <= tol || point_segment_distance(b, c, d) <= tol ||
         point_segment_distance(c, a, b) <= tol || point_segment_distance(d, a, b) <= tol;
}

bool point_strictly_in_triangle(Point2 p, Point2 a, Point2 b, Point2 c, double tol) {
  double area2 = orient2d(a, b, c);
  if (area2 == 0.0) return false;
  if (area2 < 0) std::swap(b, c);
  auto inside = [&](Point2 u, Point2 v) {
    const double len = norm(v - u);
    return orient2d(u, v, p) / len > tol;
  };
  return inside(a, b) && inside(b, c) && inside(c, a);
}

}  // namespace cornerindex

namespace cornerindex::polygeom {

namespace {

constexpr double kPi = std::numbers::pi;

// Crossing-number test; boundary points are reported as inside.
bool point_in_loop(const Loop& loop, Point2 p) {
  bool inside = false;
  const std::size_t n = loop.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = loop[i];
    const Point2 b = loop[j];
    if (point_segment_distance(p, a, b) == 0.0) return true;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

double corner_angle(Point2 prev, Point2 cur, Point2 next) {
  // Domain lies to the left of every loop, so the interior angle is the
  // counterclockwise angle from (next - cur) to (prev - cur).
  const Point2 u = next - cur;
  const Point2 v = prev - cur;
  double theta = std::atan2(cross(u, v), dot(u, v));
  if (theta <= 0.0) theta += 2.0 * kPi;
  return theta;
}

std::string edge_label(std::size_t loop, std::size_t index) {
  std::ostringstream os;
  os << (loop == 0 ? std::string("outer") : "hole " + std::to_string(loop - 1)) << " edge "
     << index;
  return os.str();
}

}  // namespace

std::size_t PolygonalDomain::corner_count() const {
  std::size_t n = outer.size();
  for (const auto& h : holes) n += h.size();
  return n;
}

double signed_area(const Loop& loop) {
  double a = 0.0;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) a += cross(loop[i], loop[(i + 1) % n]);
  return 0.5 * a;
}

double area(const PolygonalDomain& domain) {
  double a = signed_area(domain.outer);
  for (const auto& h : domain.holes) a += signed_area(h);
  return a;
}

std::vector<DomainEdge> domain_edges(const PolygonalDomain& domain) {
  std::vector<DomainEdge> edges;
  for (std::size_t l = 0; l < domain.loop_count(); ++l) {
    const Loop& loop = domain.loop(l);
    for (std::size_t i = 0; i < loop.size(); ++i)
      edges.push_back({loop[i], loop[(i + 1) % loop.size()], l, i});
  }
  return edges;
}

void validate(const PolygonalDomain& domain) {
  const std::string who = domain.name.empty() ? std::string("domain") : domain.name;
  double diameter = 0.0;
  for (const auto& p : domain.outer) diameter = std::max(diameter, norm(p - domain.outer.front()));
  const double tol = 1e-12 * std::max(diameter, 1.0);

  for (std::size_t l = 0; l < domain.loop_count(); ++l) {
    const Loop& loop = domain.loop(l);
    if (loop.size() < 3)
      throw ValidationError(who + ": loop " + std::to_string(l) + " has fewer than 3 vertices");
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 prev = loop[(i + n - 1) % n];
      const Point2 cur = loop[i];
      const Point2 next = loop[(i + 1) % n];
      if (distance(cur, next) <= tol)
        throw ValidationError(who + ": degenerate (zero-length) " + edge_label(l, i));
      const Point2 u = cur - prev;
      const Point2 v = next - cur;
      if (std::abs(cross(u, v)) <= 1e-12 * norm(u) * norm(v))
        throw ValidationError(who + ": collinear corner at vertex " + std::to_string(i) +
                              " between " + edge_label(l, (i + n - 1) % n) + " and " +
                              edge_label(l, i));
    }
    const double a = signed_area(loop);
    if (l == 0 && !(a > 0))
      throw ValidationError(who + ": outer loop must be counterclockwise (signed area > 0)");
    if (l > 0 && !(a < 0))
      throw ValidationError(who + ": hole " + std::to_string(l - 1) +
                            " must be clockwise (signed area < 0)");
  }

  const auto edges = domain_edges(domain);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& e = edges[i];
      const auto& f = edges[j];
      bool hit = false;
      if (e.loop == f.loop) {
        const std::size_t n = domain.loop(e.loop).size();
        const bool adjacent = (e.index + 1) % n == f.index || (f.index + 1) % n == e.index;
        if (adjacent) continue;  // shared endpoint only; collinear overlap caught above
        hit = segments_intersect(e.a, e.b, f.a, f.b, tol);
      } else {
        hit = segments_intersect(e.a, e.b, f.a, f.b, tol);
      }
      if (hit)
        throw ValidationError(who + ": " + edge_label(e.loop, e.index) + " intersects " +
                              edge_label(f.loop, f.index));
    }
  }

  for (std::size_t h = 0; h < domain.holes.size(); ++h) {
    if (!point_in_loop(domain.outer, domain.holes[h].front()))
      throw ValidationError(who + ": hole " + std::to_string(h) + " is not inside the outer loop");
    for (std::size_t g = 0; g < domain.holes.size(); ++g) {
      if (g != h && point_in_loop(domain.holes[g], domain.holes[h].front()))
        throw ValidationError(who + ": hole " + std::to_string(h) + " lies inside hole " +
                              std::to_string(g));
    }
  }
}

int euler_characteristic(const PolygonalDomain& domain) {
  validate(domain);
  return 1 - static_cast<int>(domain.holes.size());
}

std::vector<CornerVertex> interior_angles(const PolygonalDomain& domain) {
  validate(domain);
  std::vector<CornerVertex> corners;
  corners.reserve(domain.corner_count());
  for (std::size_t l = 0; l < domain.loop_count(); ++l) {
    const Loop& loop = domain.loop(l);
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      CornerVertex c;
      c.position = loop[i];
      c.interior_angle = corner_angle(loop[(i + n - 1) % n], loop[i], loop[(i + 1) % n]);
      c.on_hole = l > 0;
      c.loop = l;
      c.index = i;
      corners.push_back(c);
    }
  }
  return corners;
}

double loop_turning(const PolygonalDomain& domain, std::size_t loop) {
  double sum = 0.0;
  for (const auto& c : interior_angles(domain))
    if (c.loop == loop) sum += kPi - c.interior_angle;
  return sum;
}

bool contains_strictly(const PolygonalDomain& domain, Point2 p, double tol) {
  if (boundary_distance(domain, p) <= tol) return false;
  if (!point_in_loop(domain.outer, p)) return false;
  for (const auto& h : domain.holes)
    if (point_in_loop(h, p)) return false;
  return true;
}

double boundary_distance(const PolygonalDomain& domain, Point2 p) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& e : domain_edges(domain)) d = std::min(d, point_segment_distance(p, e.a, e.b));
  return d;
}

PolygonalDomain rigid_motion(const PolygonalDomain& domain, double angle, Point2 shift) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  auto move = [&](Point2 p) { return Point2{c * p.x - s * p.y + shift.x, s * p.x + c * p.y + shift.y}; };
  PolygonalDomain out = domain;
  for (auto& p : out.outer) p = move(p);
  for (auto& h : out.holes)
    for (auto& p : h) p = move(p);
  return out;
}

TurningReport corner_turning_integrals(double theta, double rounding_radius,
                                       std::size_t quad_points, double edge_length) {
  if (!(theta > 0.0 && theta < 2.0 * kPi))
    throw GeometryError("interior angle must lie in (0, 2pi)");
  if (!(rounding_radius > 0.0)) throw GeometryError("rounding radius must be positive");
  if (quad_points == 0) throw GeometryError("quad_points must be positive");
  if (rounding_radius > 0.5 * edge_length)
    throw GeometryError("rounding radius exceeds half the shortest incident edge");

  TurningReport report;
  report.interior_angle = theta;
  report.rounding_radius = rounding_radius;
  report.quad_points = quad_points;
  report.inequality_tolerance = 1e-8;

  // Corner at the origin; the boundary arrives along +x and leaves turned
  // left by tau = pi - theta (domain on the left).
  const double tau = kPi - theta;
  if (std::abs(tau) > 0.0) {
    const double tangent_length = rounding_radius * std::tan(0.5 * std::abs(tau));
    if (tangent_length > 0.5 * edge_length)
      throw GeometryError("rounding arc does not fit on the incident edges");

    const Point2 d_in{1.0, 0.0};
    const Point2 t1 = -tangent_length * d_in;
    const double side = tau > 0 ? 1.0 : -1.0;
    const Point2 normal{-d_in.y * side, d_in.x * side};
    const Point2 center = t1 + rounding_radius * normal;
    const Point2 start = t1 - center;
    const double phi0 = std::atan2(start.y, start.x);
    const double radius = rounding_radius;

    // Arc gamma(u) = center + R (cos phi(u), sin phi(u)), phi(u) = phi0 + tau u.
    auto curvature_and_speed = [&](double u, double& k, double& speed) {
      const double phi = phi0 + tau * u;
      const Point2 d1{-radius * tau * std::sin(phi), radius * tau * std::cos(phi)};
      const Point2 d2{-radius * tau * tau * std::cos(phi), -radius * tau * tau * std::sin(phi)};
      speed = norm(d1);
      k = cross(d1, d2) / (speed * speed * speed);
    };

    const std::size_t per_panel = std::min<std::size_t>(quad_points, 10);
    const std::size_t panels = std::max<std::size_t>(1, quad_points / per_panel);
    const auto rule = quadrature::gauss_legendre(per_panel);
    double signed_sum = 0.0;
    double abs_sum = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
      const double lo = static_cast<double>(p) / panels;
      const double hi = static_cast<double>(p + 1) / panels;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double u = 0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.nodes[q];
        const double w = 0.5 * (hi - lo) * rule.weights[q];
        double k = 0.0, speed = 0.0;
        curvature_and_speed(u, k, speed);
        signed_sum += w * k * speed;
        abs_sum += w * std::abs(k) * speed;
      }
    }
    report.signed_turning = signed_sum;
    report.absolute_turning = abs_sum;
  }
  report.inequality_holds =
      -report.absolute_turning >= -(kPi - theta) - report.inequality_tolerance;
  return report;
}

}  // namespace cornerindex::polygeom
