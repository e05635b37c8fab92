#pragma once

// Named test domains and the plain-text loop file format.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cornerindex/polygeom.hpp"

namespace cornerindex::domains {

using polygeom::Loop;
using polygeom::PolygonalDomain;

/// Regular n-gon, counterclockwise, first vertex at `start_angle`.
Loop regular_polygon(int n, double circumradius, Point2 center, double start_angle);

/// The corner annulus [-2,2]^2 minus the open square (-1,1)^2.
PolygonalDomain corner_annulus();

/// [0,1]^2.
PolygonalDomain unit_square();

/// [-2,2]^2 minus an open regular pentagon centred at the origin.
PolygonalDomain pentagon_domain(double circumradius = 1.0);

/// [-2,2]^2 minus an open equilateral triangle centred at the origin.
PolygonalDomain triangle_domain(double side = 1.0);

/// Small equilateral triangle hole near the middle of the bottom outer edge.
Loop notch_hole(double notch_size = 0.2);

/// Pentagon and triangle domains with the notch removed as well (Euler
/// characteristic -1).
PolygonalDomain pentagon_domain_notched(double circumradius = 1.0, double notch_size = 0.2);
PolygonalDomain triangle_domain_notched(double side = 1.0, double notch_size = 0.2);

/// Polygonal cone sector {r < radius, |phi| < half_angle} with the arc
/// replaced by `arc_segments` chords.
PolygonalDomain cone_sector(double half_angle, double radius = 1.0, int arc_segments = 128);

/// Resolves "A", "square", "P", "Q", "P'" / "Pprime", "Q'" / "Qprime", or a path
/// to a domain file.
PolygonalDomain by_name(const std::string& name);

/// Loop file format: `outer` / `hole` header lines followed by one `x y` pair
/// per line; `#` starts a comment; an optional `name <label>` line.
PolygonalDomain read_domain(std::istream& in, const std::string& default_name = "");
PolygonalDomain read_domain_file(const std::filesystem::path& path);
void write_domain(std::ostream& out, const PolygonalDomain& domain);

}  // namespace cornerindex::domains
