#pragma once

// Conforming triangulations of polygonal domains with boundary tags and
// vertex disks.

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cornerindex/polygeom.hpp"

namespace cornerindex::meshgen {

using polygeom::CornerVertex;
using polygeom::PolygonalDomain;

enum class BoundaryTag : std::uint8_t { interior, untagged, vertical, horizontal, oblique };

const char* to_string(BoundaryTag tag);

/// Triangulation with derived edges. Triangles are counterclockwise, edges
/// run from the lower to the higher vertex index and are sorted
/// lexicographically.
struct SimplicialMesh {
  std::vector<Point2> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::array<int, 2>> edges;
  /// Edge k of triangle t joins triangles[t][k] and triangles[t][(k+1)%3].
  std::vector<std::array<int, 3>> triangle_edges;
  /// +1 when the triangle traverses the edge from its lower to higher vertex.
  std::vector<std::array<int, 3>> triangle_edge_signs;
  /// Global domain-edge index (domain_edges() order) of a boundary edge, -1 inside.
  std::vector<int> edge_boundary_segment;
  std::vector<BoundaryTag> boundary_tags;
  /// Domain corner index (interior_angles() order) or -1.
  std::vector<int> corner_flags;
  double h = 0.0;
  std::vector<std::string> warnings;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }
  std::size_t triangle_count() const { return triangles.size(); }
  long euler_characteristic() const {
    return static_cast<long>(vertices.size()) - static_cast<long>(edges.size()) +
           static_cast<long>(triangles.size());
  }
  bool is_boundary_edge(std::size_t e) const { return edge_boundary_segment[e] >= 0; }
  bool is_tagged() const;
  double signed_area(std::size_t t) const;
  double min_angle() const;
};

struct TriangulateOptions {
  double h = 0.1;        ///< target edge length away from corners
  double grading = 2.0;  ///< exponent gamma >= 1; 1 means uniform
  bool structured = false;
  /// false: constrained Delaunay triangulation of the domain corners only.
  bool refine = true;
  std::size_t max_triangles = 4'000'000;
};

/// Builds a conforming triangulation. Local edge length is about
/// h * min(1, d)^(1 - 1/gamma), d the distance to the nearest corner, clamped
/// below at h^2. Deterministic for fixed inputs. Boundary tags are left
/// `untagged`; run tag_boundary() afterwards.
SimplicialMesh triangulate(const PolygonalDomain& domain, const TriangulateOptions& options);

/// Tags every boundary edge vertical, horizontal or oblique from the domain
/// edge it lies on. An oblique edge on an otherwise axis-aligned domain adds a
/// warning to the mesh.
SimplicialMesh tag_boundary(SimplicialMesh mesh, const PolygonalDomain& domain);

/// Convenience: triangulate + tag_boundary.
SimplicialMesh build_mesh(const PolygonalDomain& domain, const TriangulateOptions& options);

/// Tags of the domain's own edges (one per domain edge, domain_edges() order).
std::vector<BoundaryTag> domain_edge_tags(const PolygonalDomain& domain);

/// All simplices meeting the open disk B_rho(center).
struct VertexDisk {
  Point2 center;
  double radius = 0.0;
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<int> triangles;
};

/// Throws GeometryError for rho < 0.
VertexDisk vertex_disk(const SimplicialMesh& mesh, const CornerVertex& corner, double rho);

/// Disks around every corner of `domain`. Throws GeometryError when rho
/// exceeds half the distance between two distinct corners.
std::vector<VertexDisk> vertex_disks(const SimplicialMesh& mesh, const PolygonalDomain& domain,
                                     double rho);

/// Relabels vertices: new index of old vertex v is perm[v]. Edges are rebuilt.
SimplicialMesh permute_vertices(const SimplicialMesh& mesh, const std::vector<int>& perm);

// OFF-style mesh file plus a sidecar tag file.
void write_off(std::ostream& out, const SimplicialMesh& mesh);
/// Reads vertices and triangles; boundary edges are matched against `domain`.
SimplicialMesh read_off(std::istream& in, const PolygonalDomain& domain);

/// Builds a mesh from raw vertices and counterclockwise triangles, deriving
/// edges, boundary segments and corner flags against `domain`.
SimplicialMesh make_mesh(std::vector<Point2> vertices, std::vector<std::array<int, 3>> triangles,
                         const PolygonalDomain& domain);
void write_tags(std::ostream& out, const SimplicialMesh& mesh,
                const std::vector<VertexDisk>& disks = {});

}  // namespace cornerindex::meshgen
