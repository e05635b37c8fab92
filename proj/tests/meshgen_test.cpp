#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "cornerindex/domains.hpp"
#include "cornerindex/errors.hpp"
#include "cornerindex/mesh.hpp"
#include "doctest.h"

using namespace cornerindex;
using meshgen::BoundaryTag;
using meshgen::SimplicialMesh;

namespace {

SimplicialMesh mesh_of(const polygeom::PolygonalDomain& d, double h, bool structured = false) {
  meshgen::TriangulateOptions o;
  o.h = h;
  o.structured = structured;
  return meshgen::build_mesh(d, o);
}

double tri_area(const SimplicialMesh& m, std::size_t t) {
  const auto& a = m.vertices[m.triangles[t][0]];
  const auto& b = m.vertices[m.triangles[t][1]];
  const auto& c = m.vertices[m.triangles[t][2]];
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

// Independent edge census: how many triangles use each undirected edge.
std::map<std::pair<int, int>, int> edge_use(const SimplicialMesh& m) {
  std::map<std::pair<int, int>, int> use;
  for (const auto& t : m.triangles)
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      ++use[{a, b}];
    }
  return use;
}

}  // namespace

TEST_SUITE("meshgen") {
  TEST_CASE("property: V - E + F equals chi on every domain and level") {
    struct Case {
      polygeom::PolygonalDomain d;
      std::vector<double> hs;
    };
    const std::vector<Case> cases{{domains::corner_annulus(), {0.4, 0.2, 0.1}},
                                  {domains::unit_square(), {0.3, 0.1}},
                                  {domains::pentagon_domain_notched(), {0.15, 0.1}},
                                  {domains::triangle_domain_notched(), {0.15, 0.1}}};
    for (const auto& c : cases)
      for (double h : c.hs)
        for (bool structured : {false, true}) {
          const bool on_grid = std::abs(1 / h - std::round(1 / h)) < 1e-9;
          if (structured && (!on_grid || (c.d.name != "A" && c.d.name != "square"))) continue;
          const auto m = mesh_of(c.d, h, structured);
          const auto use = edge_use(m);
          const long vef = static_cast<long>(m.vertices.size()) - static_cast<long>(use.size()) +
                           static_cast<long>(m.triangles.size());
          CHECK(vef == polygeom::euler_characteristic(c.d));
          CHECK(m.euler_characteristic() == vef);
        }
  }

  TEST_CASE("triangulation is conforming, counterclockwise and covers the domain") {
    for (const auto& d : {domains::corner_annulus(), domains::pentagon_domain_notched()}) {
      const auto m = mesh_of(d, d.name == "A" ? 0.2 : 0.1);
      double area = 0.0;
      for (std::size_t t = 0; t < m.triangles.size(); ++t) {
        CHECK(tri_area(m, t) > 0.0);
        area += tri_area(m, t);
      }
      CHECK(area == doctest::Approx(polygeom::area(d)).epsilon(1e-12));
      std::size_t boundary = 0;
      for (const auto& [e, n] : edge_use(m)) {
        CHECK((n == 1 || n == 2));
        boundary += n == 1;
      }
      std::size_t tagged_boundary = 0;
      for (std::size_t e = 0; e < m.edges.size(); ++e) tagged_boundary += m.is_boundary_edge(e);
      CHECK(boundary == tagged_boundary);
      CHECK(m.is_tagged());
    }
  }

  TEST_CASE("edge orientation and triangle edge signs") {
    const auto m = mesh_of(domains::corner_annulus(), 0.4);
    for (std::size_t e = 1; e < m.edges.size(); ++e) CHECK(m.edges[e - 1] < m.edges[e]);
    for (std::size_t t = 0; t < m.triangles.size(); ++t)
      for (int k = 0; k < 3; ++k) {
        const auto& e = m.edges[m.triangle_edges[t][k]];
        const int a = m.triangles[t][k], b = m.triangles[t][(k + 1) % 3];
        CHECK(e[0] < e[1]);
        CHECK(std::min(a, b) == e[0]);
        CHECK(std::max(a, b) == e[1]);
        CHECK(m.triangle_edge_signs[t][k] == (a < b ? 1 : -1));
      }
  }

  TEST_CASE("boundary tags on A and on the notched pentagon") {
    const auto a = mesh_of(domains::corner_annulus(), 0.2);
    for (std::size_t e = 0; e < a.edges.size(); ++e) {
      const auto& p = a.vertices[a.edges[e][0]];
      const auto& q = a.vertices[a.edges[e][1]];
      if (!a.is_boundary_edge(e)) {
        CHECK(a.boundary_tags[e] == BoundaryTag::interior);
      } else if (p.x == q.x) {
        CHECK(a.boundary_tags[e] == BoundaryTag::vertical);
      } else {
        CHECK(p.y == q.y);
        CHECK(a.boundary_tags[e] == BoundaryTag::horizontal);
      }
    }
    const auto p = mesh_of(domains::pentagon_domain_notched(), 0.1);
    CHECK(std::count(p.boundary_tags.begin(), p.boundary_tags.end(), BoundaryTag::oblique) > 0);
  }

  TEST_CASE("corners are mesh vertices") {
    const auto d = domains::corner_annulus();
    const auto m = mesh_of(d, 0.2);
    const auto corners = polygeom::interior_angles(d);
    std::vector<int> flagged;
    for (std::size_t v = 0; v < m.vertices.size(); ++v)
      if (m.corner_flags[v] >= 0) flagged.push_back(m.corner_flags[v]);
    std::sort(flagged.begin(), flagged.end());
    std::vector<int> all(corners.size());
    std::iota(all.begin(), all.end(), 0);
    CHECK(flagged == all);
  }

  TEST_CASE("grading refines towards reentrant corners") {
    meshgen::TriangulateOptions graded, uniform;
    graded.h = uniform.h = 0.2;
    graded.grading = 2.0;
    uniform.grading = 1.0;
    const auto d = domains::corner_annulus();
    auto shortest_near = [](const SimplicialMesh& m, Point2 c) {
      double s = 1e9;
      for (const auto& e : m.edges) {
        const auto& p = m.vertices[e[0]];
        const auto& q = m.vertices[e[1]];
        if (distance(p, c) < 1e-12 || distance(q, c) < 1e-12) s = std::min(s, distance(p, q));
      }
      return s;
    };
    const auto g = meshgen::build_mesh(d, graded);
    const auto u = meshgen::build_mesh(d, uniform);
    CHECK(shortest_near(g, {1.0, 1.0}) < 0.5 * shortest_near(u, {1.0, 1.0}));
    CHECK(g.triangles.size() > u.triangles.size());
    CHECK(g.h <= 0.2 * (1 + 1e-12));
  }

  TEST_CASE("property: deterministic output") {
    const auto a = mesh_of(domains::pentagon_domain_notched(), 0.1);
    const auto b = mesh_of(domains::pentagon_domain_notched(), 0.1);
    REQUIRE(a.vertices.size() == b.vertices.size());
    for (std::size_t v = 0; v < a.vertices.size(); ++v) {
      CHECK(a.vertices[v].x == b.vertices[v].x);
      CHECK(a.vertices[v].y == b.vertices[v].y);
    }
    CHECK(a.triangles == b.triangles);
  }

  TEST_CASE("property: vertex permutation preserves the complex") {
    const auto m = mesh_of(domains::corner_annulus(), 0.4);
    std::vector<int> perm(m.vertices.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(3);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto p = meshgen::permute_vertices(m, perm);
    CHECK(p.edges.size() == m.edges.size());
    CHECK(p.euler_characteristic() == 0);
    std::size_t bm = 0, bp = 0;
    for (std::size_t e = 0; e < m.edges.size(); ++e) bm += m.is_boundary_edge(e), bp += p.is_boundary_edge(e);
    CHECK(bm == bp);
    for (std::size_t v = 0; v < m.vertices.size(); ++v) CHECK(p.corner_flags[perm[v]] == m.corner_flags[v]);
  }

  TEST_CASE("OFF round trip") {
    const auto d = domains::corner_annulus();
    const auto m = mesh_of(d, 0.4);
    std::stringstream s;
    meshgen::write_off(s, m);
    const auto r = meshgen::read_off(s, d);
    CHECK(r.triangles == m.triangles);
    CHECK(r.edges == m.edges);
    CHECK(r.boundary_tags == m.boundary_tags);
    for (std::size_t v = 0; v < m.vertices.size(); ++v) {
      CHECK(r.vertices[v].x == m.vertices[v].x);
      CHECK(r.vertices[v].y == m.vertices[v].y);
    }
  }

  TEST_CASE("vertex disks") {
    const auto d = domains::corner_annulus();
    const auto m = mesh_of(d, 0.1);
    const auto disks = meshgen::vertex_disks(m, d, 0.2);
    REQUIRE(disks.size() == 8);
    for (const auto& disk : disks) {
      for (int v : disk.vertices) CHECK(distance(m.vertices[v], disk.center) < 0.2);
      CHECK(disk.vertices.size() >= 2);
      CHECK(disk.edges.size() >= disk.vertices.size() - 1);
    }
    CHECK_THROWS_AS(meshgen::vertex_disks(m, d, 1.5), GeometryError);
    CHECK_THROWS_AS(meshgen::vertex_disk(m, polygeom::interior_angles(d)[0], -0.1), GeometryError);
  }

  TEST_CASE("invalid requests") {
    meshgen::TriangulateOptions o;
    o.h = 0.0;
    CHECK_THROWS(meshgen::build_mesh(domains::corner_annulus(), o));
    o.h = 0.3;
    CHECK_THROWS(meshgen::build_mesh(domains::pentagon_domain_notched(), o));
    o.h = 0.1;
    o.grading = 0.5;
    CHECK_THROWS(meshgen::build_mesh(domains::corner_annulus(), o));
  }
}
