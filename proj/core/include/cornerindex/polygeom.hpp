#pragma once

// Planar polygonal domains with holes: validation, Euler characteristic,
// interior angles and the corner-rounding curvature integrals.

#include <cstddef>
#include <string>
#include <vector>

#include "cornerindex/geometry.hpp"

namespace cornerindex::polygeom {

/// Closed vertex loop; the closing edge back to the first vertex is implicit.
using Loop = std::vector<Point2>;

/// Region bounded by a counterclockwise outer loop minus clockwise holes.
///
/// Construction does not validate; call validate() (or any operation that
/// does) before trusting the invariants.
struct PolygonalDomain {
  Loop outer;
  std::vector<Loop> holes;
  std::string name;

  std::size_t loop_count() const { return 1 + holes.size(); }
  /// Loop 0 is the outer loop, loop i > 0 is holes[i - 1].
  const Loop& loop(std::size_t i) const { return i == 0 ? outer : holes[i - 1]; }
  std::size_t corner_count() const;
};

/// Signed area of a loop (shoelace); positive for counterclockwise.
double signed_area(const Loop& loop);

/// Area of the domain: outer area minus hole areas.
double area(const PolygonalDomain& domain);

/// Throws ValidationError naming the offending loop/edge pair when the domain
/// violates simplicity, disjointness, containment, orientation, or has a
/// degenerate or collinear corner.
void validate(const PolygonalDomain& domain);

/// 1 - number of holes; validates first.
int euler_characteristic(const PolygonalDomain& domain);

struct CornerVertex {
  Point2 position;
  /// Interior angle measured inside the material of the domain, in (0, 2pi).
  double interior_angle = 0.0;
  bool on_hole = false;
  std::size_t loop = 0;   ///< 0 = outer, i = holes[i-1]
  std::size_t index = 0;  ///< position within the loop

  /// Cone half-angle used by the capacity analysis.
  double half_angle() const { return 0.5 * interior_angle; }
};

/// Every corner of every loop, outer loop first, in loop order.
std::vector<CornerVertex> interior_angles(const PolygonalDomain& domain);

/// Sum of (pi - interior angle) over one loop: 2pi for the outer loop,
/// -2pi for each hole.
double loop_turning(const PolygonalDomain& domain, std::size_t loop);

/// Edges of the domain as (start, end) pairs with loop bookkeeping.
struct DomainEdge {
  Point2 a;
  Point2 b;
  std::size_t loop = 0;
  std::size_t index = 0;  ///< edge from loop vertex `index` to `index + 1`
};
std::vector<DomainEdge> domain_edges(const PolygonalDomain& domain);

/// Point-in-domain test (inside outer, outside every hole, not on the boundary
/// within `tol`).
bool contains_strictly(const PolygonalDomain& domain, Point2 p, double tol = 1e-12);

/// Distance from p to the nearest domain edge.
double boundary_distance(const PolygonalDomain& domain, Point2 p);

/// Applies x -> R x + t to every vertex (rotation angle in radians).
PolygonalDomain rigid_motion(const PolygonalDomain& domain, double angle, Point2 shift);

// ---------------------------------------------------------------------------
// Corner rounding

struct TurningReport {
  double interior_angle = 0.0;
  double rounding_radius = 0.0;
  double signed_turning = 0.0;    ///< integral of k ds over the rounding arc
  double absolute_turning = 0.0;  ///< integral of |k| ds
  /// -absolute_turning >= -(pi - theta), evaluated with `inequality_tolerance`.
  bool inequality_holds = false;
  double inequality_tolerance = 0.0;
  std::size_t quad_points = 0;
};

/// Rounds a corner of interior angle `theta` by a circular arc of radius
/// `rounding_radius` tangent to both incident edges (each of length
/// `edge_length`), then integrates the geodesic curvature of the arc
/// numerically from its parametrisation.
///
/// Throws GeometryError when the radius exceeds half the incident edge or
/// the tangent points do not fit on the edges.
TurningReport corner_turning_integrals(double theta, double rounding_radius,
                                       std::size_t quad_points,
                                       double edge_length = 1.0);

}  // namespace cornerindex::polygeom
