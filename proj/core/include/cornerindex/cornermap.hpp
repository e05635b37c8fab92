#pragma once

// Piecewise-affine maps between polygonal domains, the P' -> Q' fold
// counterexample, and their Lipschitz data after rescaling.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cornerindex/mesh.hpp"
#include "cornerindex/polygeom.hpp"

namespace cornerindex::cornermap {

using polygeom::PolygonalDomain;

/// One triangle of the source triangulation with the affine map x -> A x + b.
struct AffinePiece {
  std::array<Point2, 3> source;
  Eigen::Matrix2d linear = Eigen::Matrix2d::Identity();
  Point2 translation;

  Point2 apply(Point2 p) const;
  std::array<Point2, 3> image() const;
  double determinant() const { return linear.determinant(); }
  double max_singular_value() const;
  /// Builds the unique affine map sending source[k] to image[k].
  static AffinePiece interpolating(const std::array<Point2, 3>& source,
                                   const std::array<Point2, 3>& image);
};

/// A source corner and where it is declared to land.
struct VertexAssignment {
  std::string label;
  Point2 source;
  Point2 target;
};

struct CornerMap {
  PolygonalDomain source;
  PolygonalDomain target;
  std::vector<AffinePiece> pieces;
  /// The map is x -> f(x / r) on r * source.
  double scale_factor = 1.0;
  std::vector<VertexAssignment> assignments;
  /// Source boundary segments whose image is folded back onto itself.
  std::vector<std::array<Point2, 2>> fold_edges;
  /// Parameters that are library defaults rather than forced by the problem.
  std::vector<std::string> defaults;
};

struct Validation {
  double area_defect = 0.0;  ///< |sum of piece areas - area(source)| / area(source)
  bool conforming = false;   ///< every piece edge shared by <= 2 pieces, lone edges on the boundary
  double continuity_residual = 0.0;
  bool boundary_to_boundary = false;
  bool assignments_hold = false;
  bool image_in_target = false;
  std::size_t orientation_reversing = 0;
  /// Adjacent piece pairs of opposite orientation with a shared edge meeting a fold edge.
  std::vector<std::size_t> fold_pairs_per_edge;
  std::vector<std::string> problems;

  bool valid() const { return problems.empty(); }
  bool folds_present() const;
};

Validation validate(const CornerMap& map, double tol = 1e-12);

struct CounterexampleParams {
  double pentagon_circumradius = 1.0;
  double triangle_side = 1.0;
  double notch_size = 0.2;
  int edge_subdivisions = 4;
  int layers = 12;
  double inner_ring_radius = 1.15;  ///< first circular layer around the pentagon
  double image_radius = 1.25;       ///< where that layer is sent
  double identity_radius = 1.55;    ///< outside this circle the map is the identity
};

struct CounterexamplePair {
  PolygonalDomain p_prime;
  PolygonalDomain q_prime;
  CornerMap map;
};

/// Throws ConstructionError when the geometry does not fit or the resulting
/// map fails validation.
CounterexamplePair build_counterexample_pair(const CounterexampleParams& params = {});

/// Identity on `domain`, one piece per triangle of `mesh`.
CornerMap identity_map(const PolygonalDomain& domain, const meshgen::SimplicialMesh& mesh);

struct LipschitzReport {
  double max_singular_value = 0.0;  ///< of the map scaled by r
  double r0 = 0.0;                  ///< smallest r with max_singular_value <= 1
};

LipschitzReport lipschitz_after_scaling(const CornerMap& map, double r);

/// Rigid motion x -> R x + t applied to the source (the target is unchanged).
CornerMap move_source(const CornerMap& map, double angle, Point2 shift);

/// Plain-text export: `scale r`, then one `piece` line per piece with the
/// three source vertices and the rows of the 2x3 affine matrix [A | b].
void write_map(std::ostream& out, const CornerMap& map);
/// Reads pieces and scale back; source/target are left empty.
CornerMap read_map(std::istream& in);

}  // namespace cornerindex::cornermap
