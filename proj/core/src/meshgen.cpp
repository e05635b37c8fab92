#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <unordered_map>

#include "cornerindex/errors.hpp"
#include "cornerindex/mesh.hpp"

namespace cornerindex::meshgen {

namespace {

using Triangle = std::array<int, 3>;

std::uint64_t edge_key(int a, int b) {
  const auto lo = static_cast<std::uint64_t>(std::min(a, b));
  const auto hi = static_cast<std::uint64_t>(std::max(a, b));
  return (lo << 32) | hi;
}

double domain_scale(const PolygonalDomain& domain) {
  double s = 0.0;
  for (const auto& p : domain.outer) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return std::max(s, 1.0);
}

// ---------------------------------------------------------------------------
// Initial triangulation: bridge holes into the outer loop, then clip ears.

struct Node {
  int vertex;
  Point2 p;
};

bool crosses_any(Point2 a, Point2 b, const std::vector<std::pair<Point2, Point2>>& segments,
                 double tol) {
  for (const auto& [c, d] : segments) {
    if (segments_cross_properly(a, b, c, d, 0.0)) return true;
    // A segment endpoint lying on the open segment (a, b) blocks it as well.
    for (Point2 q : {c, d}) {
      if (distance(q, a) <= tol || distance(q, b) <= tol) continue;
      if (point_segment_distance(q, a, b) <= tol) return true;
    }
  }
  return false;
}

std::vector<Node> bridge_holes(const PolygonalDomain& domain) {
  std::vector<Node> ring;
  int next_id = 0;
  for (const auto& p : domain.outer) ring.push_back({next_id++, p});
  std::vector<std::vector<Node>> holes;
  for (const auto& h : domain.holes) {
    std::vector<Node> hole;
    for (const auto& p : h) hole.push_back({next_id++, p});
    holes.push_back(std::move(hole));
  }

  const double tol = 1e-12 * domain_scale(domain);
  std::vector<bool> merged(holes.size(), false);
  for (std::size_t round = 0; round < holes.size(); ++round) {
    // Every boundary segment still present: ring, and unmerged holes.
    std::vector<std::pair<Point2, Point2>> segments;
    for (std::size_t i = 0; i < ring.size(); ++i)
      segments.emplace_back(ring[i].p, ring[(i + 1) % ring.size()].p);
    for (std::size_t h = 0; h < holes.size(); ++h) {
      if (merged[h]) continue;
      for (std::size_t i = 0; i < holes[h].size(); ++i)
        segments.emplace_back(holes[h][i].p, holes[h][(i + 1) % holes[h].size()].p);
    }

    // Shortest admissible bridge from any unmerged hole vertex to a ring node.
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_hole = 0, best_hv = 0, best_rn = 0;
    for (std::size_t h = 0; h < holes.size(); ++h) {
      if (merged[h]) continue;
      for (std::size_t hv = 0; hv < holes[h].size(); ++hv) {
        for (std::size_t rn = 0; rn < ring.size(); ++rn) {
          const Point2 a = holes[h][hv].p;
          const Point2 b = ring[rn].p;
          const double len = distance(a, b);
          if (len >= best || len <= tol) continue;
          if (!polygeom::contains_strictly(domain, midpoint(a, b), tol)) continue;
          if (crosses_any(a, b, segments, tol)) continue;
          best = len;
          best_hole = h;
          best_hv = hv;
          best_rn = rn;
        }
      }
    }
    if (!std::isfinite(best)) throw RefinementError("could not bridge a hole to the outer loop");

    const auto& hole = holes[best_hole];
    std::vector<Node> spliced;
    spliced.reserve(ring.size() + hole.size() + 2);
    for (std::size_t i = 0; i <= best_rn; ++i) spliced.push_back(ring[i]);
    for (std::size_t k = 0; k <= hole.size(); ++k) spliced.push_back(hole[(best_hv + k) % hole.size()]);
    for (std::size_t i = best_rn; i < ring.size(); ++i) spliced.push_back(ring[i]);
    ring = std::move(spliced);
    merged[best_hole] = true;
  }
  return ring;
}

double min_angle_of(Point2 a, Point2 b, Point2 c) {
  auto angle = [](Point2 p, Point2 q, Point2 r) {
    const Point2 u = q - p;
    const Point2 v = r - p;
    return std::atan2(std::abs(cross(u, v)), dot(u, v));
  };
  return std::min({angle(a, b, c), angle(b, c, a), angle(c, a, b)});
}

std::vector<Triangle> clip_ears(std::vector<Node> ring, const PolygonalDomain& domain) {
  const double tol = 1e-12 * domain_scale(domain);
  std::vector<Triangle> tris;
  while (ring.size() > 3) {
    const std::size_t n = ring.size();
    double best_quality = -1.0;
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      const Node& a = ring[(i + n - 1) % n];
      const Node& b = ring[i];
      const Node& c = ring[(i + 1) % n];
      const double o = orient2d(a.p, b.p, c.p);
      if (o <= tol * tol) continue;
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        const Point2 q = ring[j].p;
        if (distance(q, a.p) <= tol || distance(q, b.p) <= tol || distance(q, c.p) <= tol) continue;
        if (point_strictly_in_triangle(q, a.p, b.p, c.p, -tol)) ok = false;
      }
      for (std::size_t j = 0; j < n && ok; ++j) {
        const Point2 u = ring[j].p;
        const Point2 v = ring[(j + 1) % n].p;
        if (segments_cross_properly(a.p, c.p, u, v, 0.0)) ok = false;
      }
      if (!ok) continue;
      if (!polygeom::contains_strictly(domain, (a.p + b.p + c.p) / 3.0, 0.0)) continue;
      const double quality = min_angle_of(a.p, b.p, c.p);
      if (quality > best_quality) {
        best_quality = quality;
        best = i;
      }
    }
    if (best == n) throw RefinementError("ear clipping found no admissible ear");
    const Node& a = ring[(best + n - 1) % n];
    const Node& b = ring[best];
    const Node& c = ring[(best + 1) % n];
    tris.push_back({a.vertex, b.vertex, c.vertex});
    ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(best));
  }
  if (orient2d(ring[0].p, ring[1].p, ring[2].p) <= 0)
    throw RefinementError("ear clipping left a degenerate final triangle");
  tris.push_back({ring[0].vertex, ring[1].vertex, ring[2].vertex});
  return tris;
}

// ---------------------------------------------------------------------------
// Mutable triangulation used for flips and longest-edge bisection.

class WorkMesh {
 public:
  WorkMesh(std::vector<Point2> vertices, std::vector<Triangle> tris,
           std::unordered_map<std::uint64_t, int> constrained)
      : vertices_(std::move(vertices)), tris_(std::move(tris)), constrained_(std::move(constrained)) {
    for (std::size_t t = 0; t < tris_.size(); ++t)
      for (int k = 0; k < 3; ++k) attach(tris_[t][k], tris_[t][(k + 1) % 3], static_cast<int>(t));
  }

  std::vector<Point2>& vertices() { return vertices_; }
  std::vector<Triangle>& triangles() { return tris_; }

  void lawson_flips() {
    bool changed = true;
    std::size_t sweeps = 0;
    while (changed && sweeps++ < 200) {
      changed = false;
      std::vector<std::uint64_t> keys;
      keys.reserve(adjacency_.size());
      for (const auto& [key, owners] : adjacency_)
        if (owners[0] >= 0 && owners[1] >= 0 && !constrained_.contains(key)) keys.push_back(key);
      std::sort(keys.begin(), keys.end());
      for (auto key : keys) changed |= try_flip(key);
    }
  }

  template <class TargetFn>
  void refine(TargetFn target, std::size_t max_triangles) {
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      while (longest_length(static_cast<int>(t)) > target(tris_[t])) {
        refine_lepp(static_cast<int>(t));
        if (tris_.size() > max_triangles)
          throw RefinementError("refinement exceeded the triangle budget");
      }
    }
  }

 private:
  void attach(int a, int b, int t) {
    auto& owners = adjacency_.try_emplace(edge_key(a, b), std::array<int, 2>{-1, -1}).first->second;
    if (owners[0] < 0) owners[0] = t;
    else if (owners[1] < 0) owners[1] = t;
    else throw RefinementError("non-manifold edge in triangulation");
  }

  void replace_owner(int a, int b, int from, int to) {
    auto& owners = adjacency_.at(edge_key(a, b));
    if (owners[0] == from) owners[0] = to;
    else if (owners[1] == from) owners[1] = to;
  }

  int other_owner(std::uint64_t key, int t) const {
    const auto& owners = adjacency_.at(key);
    return owners[0] == t ? owners[1] : owners[0];
  }

  double edge_length2(int a, int b) const {
    const Point2 d = vertices_[a] - vertices_[b];
    return dot(d, d);
  }

  // Longest edge under the total order (length, lower index, higher index).
  int longest_slot(int t) const {
    const auto& tri = tris_[t];
    int best = 0;
    auto key_of = [&](int k) {
      const int a = tri[k], b = tri[(k + 1) % 3];
      return std::tuple(edge_length2(a, b), std::min(a, b), std::max(a, b));
    };
    for (int k = 1; k < 3; ++k)
      if (key_of(k) > key_of(best)) best = k;
    return best;
  }

  double longest_length(int t) const {
    const int k = longest_slot(t);
    return std::sqrt(edge_length2(tris_[t][k], tris_[t][(k + 1) % 3]));
  }

  std::uint64_t longest_key(int t) const {
    const int k = longest_slot(t);
    return edge_key(tris_[t][k], tris_[t][(k + 1) % 3]);
  }

  void refine_lepp(int start) {
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int t = stack.back();
      const auto key = longest_key(t);
      const int nb = other_owner(key, t);
      if (nb < 0 || longest_key(nb) == key) {
        bisect(key);
        stack.pop_back();
      } else {
        stack.push_back(nb);
      }
    }
  }

  void bisect(std::uint64_t key) {
    const int u = static_cast<int>(key >> 32);
    const int v = static_cast<int>(key & 0xffffffffu);
    const auto owners = adjacency_.at(key);
    adjacency_.erase(key);
    const int m = static_cast<int>(vertices_.size());
    vertices_.push_back(midpoint(vertices_[u], vertices_[v]));

    if (auto it = constrained_.find(key); it != constrained_.end()) {
      const int segment = it->second;
      constrained_.erase(it);
      constrained_.emplace(edge_key(u, m), segment);
      constrained_.emplace(edge_key(m, v), segment);
    }

    for (int t : owners) {
      if (t < 0) continue;
      Triangle tri = tris_[t];
      while (edge_key(tri[0], tri[1]) != key) std::rotate(tri.begin(), tri.begin() + 1, tri.end());
      const int a = tri[0], b = tri[1], c = tri[2];
      const int child = static_cast<int>(tris_.size());
      tris_[t] = {a, m, c};
      tris_.push_back({m, b, c});
      replace_owner(b, c, t, child);
      attach(a, m, t);
      attach(m, b, child);
      attach(m, c, t);
      attach(m, c, child);
    }
  }

  bool try_flip(std::uint64_t key) {
    const auto it = adjacency_.find(key);
    if (it == adjacency_.end()) return false;
    const auto [t1, t2] = it->second;
    if (t1 < 0 || t2 < 0) return false;
    Triangle p = tris_[t1];
    while (edge_key(p[0], p[1]) != key) std::rotate(p.begin(), p.begin() + 1, p.end());
    Triangle q = tris_[t2];
    while (edge_key(q[0], q[1]) != key) std::rotate(q.begin(), q.begin() + 1, q.end());
    const int a = p[0], b = p[1], c = p[2], d = q[2];
    auto angle_at = [&](int apex, int x, int y) {
      const Point2 u = vertices_[x] - vertices_[apex];
      const Point2 w = vertices_[y] - vertices_[apex];
      return std::atan2(std::abs(cross(u, w)), dot(u, w));
    };
    if (angle_at(c, a, b) + angle_at(d, a, b) <= std::numbers::pi + 1e-10) return false;
    if (orient2d(vertices_[a], vertices_[d], vertices_[c]) <= 0 ||
        orient2d(vertices_[d], vertices_[b], vertices_[c]) <= 0)
      return false;
    adjacency_.erase(key);
    tris_[t1] = {a, d, c};
    tris_[t2] = {d, b, c};
    // Edges (d, a) and (b, c) change owner.
    replace_owner(a, d, t2, t1);
    replace_owner(b, c, t1, t2);
    attach(d, c, t1);
    attach(d, c, t2);
    return true;
  }

  std::vector<Point2> vertices_;
  std::vector<Triangle> tris_;
  std::unordered_map<std::uint64_t, int> constrained_;
  std::unordered_map<std::uint64_t, std::array<int, 2>> adjacency_;
};

// ---------------------------------------------------------------------------

SimplicialMesh structured_mesh(const PolygonalDomain& domain, double h) {
  double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
  double xmax = -xmin, ymax = -xmin;
  for (const auto& p : domain.outer) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  auto on_grid = [h](double v, double origin) {
    const double k = (v - origin) / h;
    return std::abs(k - std::round(k)) <= 1e-9;
  };
  for (const auto& e : polygeom::domain_edges(domain)) {
    if (e.a.x != e.b.x && e.a.y != e.b.y)
      throw RefinementError("structured mode requires an axis-aligned domain");
    if (!on_grid(e.a.x, xmin) || !on_grid(e.a.y, ymin))
      throw RefinementError("structured mode requires domain corners on the h-grid");
  }
  const int nx = static_cast<int>(std::lround((xmax - xmin) / h));
  const int ny = static_cast<int>(std::lround((ymax - ymin) / h));
  std::vector<int> id(static_cast<std::size_t>((nx + 1) * (ny + 1)), -1);
  std::vector<Point2> vertices;
  auto vertex = [&](int i, int j) {
    int& slot = id[static_cast<std::size_t>(j * (nx + 1) + i)];
    if (slot < 0) {
      slot = static_cast<int>(vertices.size());
      vertices.push_back({xmin + h * i, ymin + h * j});
    }
    return slot;
  };
  std::vector<Triangle> tris;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Point2 center{xmin + h * (i + 0.5), ymin + h * (j + 0.5)};
      if (!polygeom::contains_strictly(domain, center, 0.0)) continue;
      const int v00 = vertex(i, j), v10 = vertex(i + 1, j);
      const int v11 = vertex(i + 1, j + 1), v01 = vertex(i, j + 1);
      tris.push_back({v00, v10, v11});
      tris.push_back({v00, v11, v01});
    }
  }
  return make_mesh(std::move(vertices), std::move(tris), domain);
}

}  // namespace

const char* to_string(BoundaryTag tag) {
  switch (tag) {
    case BoundaryTag::interior: return "interior";
    case BoundaryTag::untagged: return "untagged";
    case BoundaryTag::vertical: return "vertical";
    case BoundaryTag::horizontal: return "horizontal";
    case BoundaryTag::oblique: return "oblique";
  }
  return "?";
}

bool SimplicialMesh::is_tagged() const {
  if (boundary_tags.size() != edges.size()) return false;
  return std::none_of(boundary_tags.begin(), boundary_tags.end(),
                      [](BoundaryTag t) { return t == BoundaryTag::untagged; });
}

double SimplicialMesh::signed_area(std::size_t t) const {
  const auto& tri = triangles[t];
  return 0.5 * orient2d(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]);
}

double SimplicialMesh::min_angle() const {
  double m = std::numbers::pi;
  for (const auto& tri : triangles)
    m = std::min(m, min_angle_of(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]));
  return m;
}

SimplicialMesh make_mesh(std::vector<Point2> vertices, std::vector<std::array<int, 3>> triangles,
                         const PolygonalDomain& domain) {
  SimplicialMesh mesh;
  mesh.vertices = std::move(vertices);
  mesh.triangles = std::move(triangles);

  std::map<std::pair<int, int>, int> count;
  for (const auto& tri : mesh.triangles)
    for (int k = 0; k < 3; ++k) {
      const int a = tri[k], b = tri[(k + 1) % 3];
      ++count[{std::min(a, b), std::max(a, b)}];
    }
  std::map<std::pair<int, int>, int> index;
  for (const auto& [e, c] : count) {
    if (c > 2) throw RefinementError("non-manifold edge in mesh");
    index.emplace(e, static_cast<int>(mesh.edges.size()));
    mesh.edges.push_back({e.first, e.second});
  }
  mesh.triangle_edges.resize(mesh.triangles.size());
  mesh.triangle_edge_signs.resize(mesh.triangles.size());
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto& tri = mesh.triangles[t];
    if (mesh.signed_area(t) <= 0.0)
      throw RefinementError("triangle " + std::to_string(t) + " has non-positive area");
    for (int k = 0; k < 3; ++k) {
      const int a = tri[k], b = tri[(k + 1) % 3];
      mesh.triangle_edges[t][k] = index.at({std::min(a, b), std::max(a, b)});
      mesh.triangle_edge_signs[t][k] = a < b ? 1 : -1;
    }
  }

  const auto dedges = polygeom::domain_edges(domain);
  const double tol = 1e-9 * domain_scale(domain);
  mesh.edge_boundary_segment.assign(mesh.edges.size(), -1);
  mesh.boundary_tags.assign(mesh.edges.size(), BoundaryTag::interior);
  for (const auto& [e, c] : count) {
    if (c != 1) continue;
    const int id = index.at(e);
    const Point2 p = mesh.vertices[e.first], q = mesh.vertices[e.second];
    int found = -1;
    for (std::size_t s = 0; s < dedges.size(); ++s) {
      if (point_segment_distance(p, dedges[s].a, dedges[s].b) <= tol &&
          point_segment_distance(q, dedges[s].a, dedges[s].b) <= tol) {
        found = static_cast<int>(s);
        break;
      }
    }
    if (found < 0)
      throw RefinementError("boundary edge " + std::to_string(id) + " does not lie on the domain boundary");
    mesh.edge_boundary_segment[id] = found;
    mesh.boundary_tags[id] = BoundaryTag::untagged;
  }

  mesh.corner_flags.assign(mesh.vertices.size(), -1);
  std::size_t corner = 0;
  for (std::size_t l = 0; l < domain.loop_count(); ++l) {
    for (const auto& c : domain.loop(l)) {
      for (std::size_t v = 0; v < mesh.vertices.size(); ++v)
        if (distance(mesh.vertices[v], c) <= tol) {
          mesh.corner_flags[v] = static_cast<int>(corner);
          break;
        }
      ++corner;
    }
  }

  for (const auto& e : mesh.edges)
    mesh.h = std::max(mesh.h, distance(mesh.vertices[e[0]], mesh.vertices[e[1]]));
  return mesh;
}

SimplicialMesh triangulate(const PolygonalDomain& domain, const TriangulateOptions& options) {
  polygeom::validate(domain);
  if (!(options.h > 0.0)) throw RefinementError("h must be positive");
  if (!(options.grading >= 1.0)) throw RefinementError("grading exponent must be >= 1");
  double shortest = std::numeric_limits<double>::infinity();
  for (const auto& e : polygeom::domain_edges(domain)) shortest = std::min(shortest, distance(e.a, e.b));
  if (options.structured) {
    SimplicialMesh mesh = structured_mesh(domain, options.h);
    if (mesh.euler_characteristic() != polygeom::euler_characteristic(domain))
      throw RefinementError("structured mesh does not reproduce the domain topology");
    return mesh;
  }

  const auto ring = bridge_holes(domain);
  std::vector<Point2> vertices;
  for (std::size_t l = 0; l < domain.loop_count(); ++l)
    for (const auto& p : domain.loop(l)) vertices.push_back(p);
  std::vector<Triangle> tris = clip_ears(ring, domain);

  std::unordered_map<std::uint64_t, int> constrained;
  {
    int offset = 0, segment = 0;
    for (std::size_t l = 0; l < domain.loop_count(); ++l) {
      const int n = static_cast<int>(domain.loop(l).size());
      for (int i = 0; i < n; ++i) constrained.emplace(edge_key(offset + i, offset + (i + 1) % n), segment++);
      offset += n;
    }
  }

  WorkMesh work(std::move(vertices), std::move(tris), std::move(constrained));
  work.lawson_flips();

  std::vector<Point2> corners;
  for (std::size_t l = 0; l < domain.loop_count(); ++l)
    for (const auto& p : domain.loop(l)) corners.push_back(p);
  const double h = options.h;
  const double exponent = 1.0 - 1.0 / options.grading;
  const double floor = std::min(h * h, h);
  auto target = [&](const Triangle& tri) {
    if (exponent == 0.0) return h;
    const auto& v = work.vertices();
    double d = std::numeric_limits<double>::infinity();
    for (const auto& c : corners) d = std::min(d, point_triangle_distance(c, v[tri[0]], v[tri[1]], v[tri[2]]));
    return std::clamp(h * std::pow(std::min(1.0, d), exponent), floor, h);
  };
  if (options.refine) {
    if (options.h >= shortest)
      throw RefinementError("h must be smaller than the shortest domain edge");
    work.refine(target, options.max_triangles);
    work.lawson_flips();
  }

  SimplicialMesh mesh = make_mesh(std::move(work.vertices()), std::move(work.triangles()), domain);
  if (mesh.euler_characteristic() != polygeom::euler_characteristic(domain))
    throw RefinementError("mesh Euler characteristic does not match the domain");
  return mesh;
}

std::vector<BoundaryTag> domain_edge_tags(const PolygonalDomain& domain) {
  std::vector<BoundaryTag> tags;
  for (const auto& e : polygeom::domain_edges(domain)) {
    const Point2 d = e.b - e.a;
    const double len = norm(d);
    if (std::abs(d.x) <= 1e-12 * len) tags.push_back(BoundaryTag::vertical);
    else if (std::abs(d.y) <= 1e-12 * len) tags.push_back(BoundaryTag::horizontal);
    else tags.push_back(BoundaryTag::oblique);
  }
  return tags;
}

SimplicialMesh tag_boundary(SimplicialMesh mesh, const PolygonalDomain& domain) {
  const auto tags = domain_edge_tags(domain);
  const std::size_t axis_aligned = static_cast<std::size_t>(
      std::count_if(tags.begin(), tags.end(), [](BoundaryTag t) { return t != BoundaryTag::oblique; }));
  const bool mostly_axis_aligned = axis_aligned * 2 > tags.size();
  bool warned = false;
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
    const int s = mesh.edge_boundary_segment[e];
    if (s < 0) {
      mesh.boundary_tags[e] = BoundaryTag::interior;
      continue;
    }
    mesh.boundary_tags[e] = tags.at(static_cast<std::size_t>(s));
    if (tags[s] == BoundaryTag::oblique && mostly_axis_aligned && !warned) {
      mesh.warnings.push_back("boundary edge parallel to neither axis on an axis-aligned domain; tagged oblique");
      warned = true;
    }
  }
  return mesh;
}

SimplicialMesh build_mesh(const PolygonalDomain& domain, const TriangulateOptions& options) {
  return tag_boundary(triangulate(domain, options), domain);
}

VertexDisk vertex_disk(const SimplicialMesh& mesh, const CornerVertex& corner, double rho) {
  if (!(rho >= 0.0)) throw GeometryError("disk radius must be non-negative");
  VertexDisk disk;
  disk.center = corner.position;
  disk.radius = rho;
  if (rho == 0.0) return disk;
  const Point2 c = corner.position;
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v)
    if (distance(mesh.vertices[v], c) < rho) disk.vertices.push_back(static_cast<int>(v));
  for (std::size_t e = 0; e < mesh.edges.size(); ++e)
    if (point_segment_distance(c, mesh.vertices[mesh.edges[e][0]], mesh.vertices[mesh.edges[e][1]]) < rho)
      disk.edges.push_back(static_cast<int>(e));
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto& tri = mesh.triangles[t];
    if (point_triangle_distance(c, mesh.vertices[tri[0]], mesh.vertices[tri[1]], mesh.vertices[tri[2]]) < rho)
      disk.triangles.push_back(static_cast<int>(t));
  }
  return disk;
}

std::vector<VertexDisk> vertex_disks(const SimplicialMesh& mesh, const PolygonalDomain& domain,
                                     double rho) {
  const auto corners = polygeom::interior_angles(domain);
  for (std::size_t i = 0; i < corners.size(); ++i)
    for (std::size_t j = i + 1; j < corners.size(); ++j)
      if (rho > 0.5 * distance(corners[i].position, corners[j].position))
        throw GeometryError("disk radius exceeds half the distance between corners " +
                            std::to_string(i) + " and " + std::to_string(j));
  std::vector<VertexDisk> disks;
  disks.reserve(corners.size());
  for (const auto& c : corners) disks.push_back(vertex_disk(mesh, c, rho));
  return disks;
}

SimplicialMesh permute_vertices(const SimplicialMesh& mesh, const std::vector<int>& perm) {
  if (perm.size() != mesh.vertices.size()) throw GeometryError("permutation size mismatch");
  SimplicialMesh out;
  out.vertices.resize(mesh.vertices.size());
  out.corner_flags.resize(mesh.vertices.size());
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    out.vertices[static_cast<std::size_t>(perm[v])] = mesh.vertices[v];
    out.corner_flags[static_cast<std::size_t>(perm[v])] = mesh.corner_flags[v];
  }
  for (const auto& tri : mesh.triangles) out.triangles.push_back({perm[tri[0]], perm[tri[1]], perm[tri[2]]});

  std::map<std::pair<int, int>, std::size_t> old_edge;
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
    const int a = perm[mesh.edges[e][0]], b = perm[mesh.edges[e][1]];
    old_edge.emplace(std::pair{std::min(a, b), std::max(a, b)}, e);
  }
  for (const auto& [key, e] : old_edge) out.edges.push_back({key.first, key.second});
  for (const auto& [key, e] : old_edge) {
    out.edge_boundary_segment.push_back(mesh.edge_boundary_segment[e]);
    out.boundary_tags.push_back(mesh.boundary_tags[e]);
  }
  std::map<std::pair<int, int>, int> index;
  for (std::size_t e = 0; e < out.edges.size(); ++e) index.emplace(std::pair{out.edges[e][0], out.edges[e][1]}, static_cast<int>(e));
  out.triangle_edges.resize(out.triangles.size());
  out.triangle_edge_signs.resize(out.triangles.size());
  for (std::size_t t = 0; t < out.triangles.size(); ++t)
    for (int k = 0; k < 3; ++k) {
      const int a = out.triangles[t][k], b = out.triangles[t][(k + 1) % 3];
      out.triangle_edges[t][k] = index.at({std::min(a, b), std::max(a, b)});
      out.triangle_edge_signs[t][k] = a < b ? 1 : -1;
    }
  out.h = mesh.h;
  out.warnings = mesh.warnings;
  return out;
}

}  // namespace cornerindex::meshgen
