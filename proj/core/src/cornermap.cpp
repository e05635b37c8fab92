#include "cornerindex/cornermap.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "cornerindex/domains.hpp"
#include "cornerindex/errors.hpp"

namespace cornerindex::cornermap {

namespace {

constexpr double kPi = std::numbers::pi;

Point2 polar(double radius, double angle) { return {radius * std::cos(angle), radius * std::sin(angle)}; }

double wrap(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a <= -kPi) a += 2.0 * kPi;
  return a;
}

// Continuous polar angles of a closed point sequence.
std::vector<double> lifted_angles(const std::vector<Point2>& pts) {
  std::vector<double> out(pts.size());
  double prev = std::atan2(pts[0].y, pts[0].x);
  out[0] = prev;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const double raw = std::atan2(pts[k].y, pts[k].x);
    prev += wrap(raw - std::atan2(pts[k - 1].y, pts[k - 1].x));
    out[k] = prev;
  }
  return out;
}

using PointKey = std::pair<double, double>;
using EdgeKey = std::pair<PointKey, PointKey>;

PointKey key_of(Point2 p) { return {p.x, p.y}; }

EdgeKey edge_key(Point2 a, Point2 b) {
  auto ka = key_of(a), kb = key_of(b);
  return ka < kb ? EdgeKey{ka, kb} : EdgeKey{kb, ka};
}

double domain_scale(const PolygonalDomain& d) {
  double s = 1.0;
  for (const auto& p : d.outer) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return s;
}

bool on_common_edge(const PolygonalDomain& domain, Point2 a, Point2 b, double tol) {
  for (const auto& e : polygeom::domain_edges(domain))
    if (point_segment_distance(a, e.a, e.b) <= tol && point_segment_distance(b, e.a, e.b) <= tol)
      return true;
  return false;
}

bool in_closed_domain(const PolygonalDomain& domain, Point2 p, double tol) {
  return polygeom::contains_strictly(domain, p, 0.0) || polygeom::boundary_distance(domain, p) <= tol;
}

std::string fmt(Point2 p) {
  std::ostringstream s;
  s << '(' << p.x << ", " << p.y << ')';
  return s.str();
}

}  // namespace

Point2 AffinePiece::apply(Point2 p) const {
  return {linear(0, 0) * p.x + linear(0, 1) * p.y + translation.x,
          linear(1, 0) * p.x + linear(1, 1) * p.y + translation.y};
}

std::array<Point2, 3> AffinePiece::image() const {
  return {apply(source[0]), apply(source[1]), apply(source[2])};
}

double AffinePiece::max_singular_value() const {
  // Largest singular value of a 2x2 matrix in closed form.
  const double a = linear(0, 0), b = linear(0, 1), c = linear(1, 0), d = linear(1, 1);
  const double s = a * a + b * b + c * c + d * d;
  const double det = a * d - b * c;
  const double disc = std::sqrt(std::max(0.0, s * s - 4.0 * det * det));
  return std::sqrt(0.5 * (s + disc));
}

AffinePiece AffinePiece::interpolating(const std::array<Point2, 3>& source,
                                       const std::array<Point2, 3>& image) {
  Eigen::Matrix2d s, t;
  s << source[1].x - source[0].x, source[2].x - source[0].x,
       source[1].y - source[0].y, source[2].y - source[0].y;
  t << image[1].x - image[0].x, image[2].x - image[0].x,
       image[1].y - image[0].y, image[2].y - image[0].y;
  if (std::abs(s.determinant()) == 0.0) throw ConstructionError("degenerate source triangle");
  AffinePiece piece;
  piece.source = source;
  piece.linear = t * s.inverse();
  const Eigen::Vector2d b =
      Eigen::Vector2d(image[0].x, image[0].y) - piece.linear * Eigen::Vector2d(source[0].x, source[0].y);
  piece.translation = {b(0), b(1)};
  return piece;
}

bool Validation::folds_present() const {
  if (fold_pairs_per_edge.empty()) return false;
  return std::all_of(fold_pairs_per_edge.begin(), fold_pairs_per_edge.end(),
                     [](std::size_t n) { return n > 0; });
}

Validation validate(const CornerMap& map, double tol) {
  Validation v;
  const double ts = tol * std::max(domain_scale(map.source), domain_scale(map.target));

  double total = 0.0;
  for (std::size_t i = 0; i < map.pieces.size(); ++i) {
    const auto& s = map.pieces[i].source;
    const double a = 0.5 * orient2d(s[0], s[1], s[2]);
    if (a <= 0.0) v.problems.push_back("piece " + std::to_string(i) + " has non-positive source area");
    total += a;
  }
  const double src_area = polygeom::area(map.source);
  v.area_defect = std::abs(total - src_area) / src_area;
  if (v.area_defect > 1e-10) v.problems.push_back("pieces do not cover the source area");

  struct Use {
    std::size_t piece;
    int local;
  };
  std::map<EdgeKey, std::vector<Use>> edges;
  for (std::size_t i = 0; i < map.pieces.size(); ++i)
    for (int k = 0; k < 3; ++k) {
      const auto& s = map.pieces[i].source;
      edges[edge_key(s[k], s[(k + 1) % 3])].push_back({i, k});
    }

  v.conforming = true;
  v.boundary_to_boundary = true;
  v.fold_pairs_per_edge.assign(map.fold_edges.size(), 0);
  for (const auto& [key, uses] : edges) {
    const Point2 a{key.first.first, key.first.second};
    const Point2 b{key.second.first, key.second.second};
    if (uses.size() > 2) {
      v.conforming = false;
      continue;
    }
    if (uses.size() == 1) {
      if (!on_common_edge(map.source, a, b, ts)) {
        v.conforming = false;
        continue;
      }
      const auto& p = map.pieces[uses[0].piece];
      if (!on_common_edge(map.target, p.apply(a), p.apply(b), ts)) {
        v.boundary_to_boundary = false;
        v.problems.push_back("boundary edge " + fmt(a) + "-" + fmt(b) + " leaves the target boundary");
      }
      continue;
    }
    const auto& p = map.pieces[uses[0].piece];
    const auto& q = map.pieces[uses[1].piece];
    // Neighbours traverse a shared edge in opposite directions.
    if (p.source[uses[0].local] == q.source[uses[1].local]) v.conforming = false;
    v.continuity_residual = std::max({v.continuity_residual, distance(p.apply(a), q.apply(a)),
                                      distance(p.apply(b), q.apply(b))});
    if ((p.determinant() > 0.0) != (q.determinant() > 0.0)) {
      for (std::size_t f = 0; f < map.fold_edges.size(); ++f) {
        const auto& fe = map.fold_edges[f];
        if (point_segment_distance(a, fe[0], fe[1]) <= ts || point_segment_distance(b, fe[0], fe[1]) <= ts)
          ++v.fold_pairs_per_edge[f];
      }
    }
  }
  if (!v.conforming) v.problems.push_back("piece decomposition is not conforming");
  if (v.continuity_residual > ts) v.problems.push_back("map is discontinuous across a shared edge");

  v.assignments_hold = true;
  for (const auto& as : map.assignments) {
    bool found = false;
    for (const auto& p : map.pieces) {
      for (const auto& s : p.source) {
        if (distance(s, as.source) > ts) continue;
        found = true;
        if (distance(p.apply(s), as.target) > ts) v.assignments_hold = false;
      }
    }
    if (!found) v.assignments_hold = false;
    if (!v.assignments_hold) {
      v.problems.push_back("vertex " + as.label + " is not sent to " + fmt(as.target));
      break;
    }
  }

  v.image_in_target = true;
  const auto target_edges = polygeom::domain_edges(map.target);
  for (std::size_t i = 0; i < map.pieces.size() && v.image_in_target; ++i) {
    const auto img = map.pieces[i].image();
    for (int k = 0; k < 3; ++k) {
      const Point2 a = img[k], b = img[(k + 1) % 3];
      if (!in_closed_domain(map.target, a, ts) || !in_closed_domain(map.target, midpoint(a, b), ts))
        v.image_in_target = false;
      for (const auto& e : target_edges)
        if (segments_cross_properly(a, b, e.a, e.b, ts)) v.image_in_target = false;
    }
    if (std::abs(orient2d(img[0], img[1], img[2])) > ts * ts)
      for (const auto& e : target_edges)
        if (point_strictly_in_triangle(e.a, img[0], img[1], img[2], ts)) v.image_in_target = false;
    if (!v.image_in_target) v.problems.push_back("image of piece " + std::to_string(i) + " leaves the target");
  }

  for (const auto& p : map.pieces)
    if (p.determinant() < 0.0) ++v.orientation_reversing;
  return v;
}

CounterexamplePair build_counterexample_pair(const CounterexampleParams& prm) {
  const double rp = prm.pentagon_circumradius;
  const double rt = prm.triangle_side / std::sqrt(3.0);
  const int n = prm.edge_subdivisions;
  const int layers = prm.layers;
  if (n < 2 || n % 2 != 0) throw ConstructionError("edge subdivisions must be even and at least 2");
  if (layers < 2) throw ConstructionError("need at least two layers");
  if (!(rp > 0.0 && rt > 0.0 && prm.inner_ring_radius > rp && prm.identity_radius > prm.inner_ring_radius &&
        prm.image_radius > rt))
    throw ConstructionError("ring radii must increase outward from the pentagon and triangle");

  CounterexamplePair out;
  try {
    out.p_prime = domains::pentagon_domain_notched(rp, prm.notch_size);
    out.q_prime = domains::triangle_domain_notched(prm.triangle_side, prm.notch_size);
    polygeom::validate(out.p_prime);
    polygeom::validate(out.q_prime);
  } catch (const ValidationError& e) {
    throw ConstructionError(std::string("infeasible geometry: ") + e.what());
  }
  const auto notch = domains::notch_hole(prm.notch_size);
  const double clearance = 2.0 - prm.identity_radius;
  for (const auto& p : notch)
    if (norm(p) <= prm.identity_radius) throw ConstructionError("notch overlaps the transition rings");
  if (clearance <= 0.0) throw ConstructionError("transition rings do not fit inside the square");

  const auto pent = domains::regular_polygon(5, rp, {0.0, 0.0}, 0.5 * kPi);  // A B C D E
  const auto tri = domains::regular_polygon(3, rt, {0.0, 0.0}, 0.5 * kPi);   // A' B' C'
  // Target segment per pentagon edge and whether it is folded.
  const std::array<std::array<Point2, 2>, 5> edge_target{
      {{tri[0], tri[1]}, {tri[1], tri[2]}, {tri[2], tri[0]}, {tri[0], tri[1]}, {tri[0], tri[2]}}};
  const std::array<bool, 5> folded{false, false, false, true, true};

  std::vector<Point2> ring0, image0;
  for (int e = 0; e < 5; ++e) {
    const Point2 a = pent[e], b = pent[(e + 1) % 5];
    for (int k = 0; k < n; ++k) {
      const double s = static_cast<double>(k) / n;
      ring0.push_back(a + s * (b - a));
      const double u = folded[e] ? 1.0 - std::abs(2.0 * s - 1.0) : s;
      image0.push_back(edge_target[e][0] + u * (edge_target[e][1] - edge_target[e][0]));
    }
  }
  const std::size_t m = ring0.size();

  auto phi = lifted_angles(ring0);
  auto psi = lifted_angles(image0);
  {
    std::vector<Point2> closed = image0;
    closed.push_back(image0[0]);
    const auto lifted = lifted_angles(closed);
    if (std::abs(lifted.back() - lifted.front() - 2.0 * kPi) > 1e-9)
      throw ConstructionError("pentagon boundary image does not wind once around the triangle");
  }
  const double shift = 2.0 * kPi * std::round((phi[0] - psi[0]) / (2.0 * kPi));
  for (auto& a : psi) a += shift;

  // rings[j][k] source, images[j][k] image; ring 0 is the pentagon.
  std::vector<std::vector<Point2>> rings{ring0}, images{image0};
  for (int j = 1; j <= layers; ++j) {
    const double t = static_cast<double>(j - 1) / (layers - 1);
    const double rho = prm.inner_ring_radius + t * (prm.identity_radius - prm.inner_ring_radius);
    std::vector<Point2> ring(m), img(m);
    for (std::size_t k = 0; k < m; ++k) {
      ring[k] = polar(rho, phi[k]);
      if (j == layers) {
        img[k] = ring[k];
      } else {
        const double angle = (1.0 - t) * psi[k] + t * phi[k];
        img[k] = polar((1.0 - t) * prm.image_radius + t * prm.identity_radius, angle);
      }
    }
    rings.push_back(std::move(ring));
    images.push_back(std::move(img));
  }

  CornerMap& map = out.map;
  map.source = out.p_prime;
  map.target = out.q_prime;
  for (int j = 0; j < layers; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t k1 = (k + 1) % m;
      const auto& r0 = rings[j];
      const auto& r1 = rings[j + 1];
      const auto& i0 = images[j];
      const auto& i1 = images[j + 1];
      map.pieces.push_back(AffinePiece::interpolating({r0[k], r1[k], r1[k1]}, {i0[k], i1[k], i1[k1]}));
      map.pieces.push_back(AffinePiece::interpolating({r0[k], r1[k1], r0[k1]}, {i0[k], i1[k1], i0[k1]}));
    }
  }

  // Identity on the collar between the last ring and the square.
  polygeom::Loop last = rings.back();
  std::reverse(last.begin(), last.end());
  PolygonalDomain collar{out.p_prime.outer, {last, notch}, "collar"};
  meshgen::TriangulateOptions opts;
  opts.refine = false;
  const auto collar_mesh = meshgen::triangulate(collar, opts);
  for (const auto& t : collar_mesh.triangles) {
    AffinePiece piece;
    piece.source = {collar_mesh.vertices[t[0]], collar_mesh.vertices[t[1]], collar_mesh.vertices[t[2]]};
    map.pieces.push_back(piece);
  }

  const char* names[] = {"A", "B", "C", "D", "E"};
  const std::array<Point2, 5> corner_image{tri[0], tri[1], tri[2], tri[0], tri[0]};
  for (int i = 0; i < 5; ++i) map.assignments.push_back({names[i], pent[i], corner_image[i]});
  map.assignments.push_back({"mid DE", midpoint(pent[3], pent[4]), tri[1]});
  map.assignments.push_back({"mid EA", midpoint(pent[4], pent[0]), tri[2]});
  for (const auto& p : out.p_prime.outer) map.assignments.push_back({"outer corner", p, p});
  for (const auto& p : notch) map.assignments.push_back({"notch corner", p, p});
  map.fold_edges = {{pent[3], pent[4]}, {pent[4], pent[0]}};
  map.defaults = {"pentagon circumradius", "triangle side", "notch size and placement",
                  "interior extension (layered rings)"};

  const auto check = validate(map);
  if (!check.valid()) throw ConstructionError("counterexample map is invalid: " + check.problems.front());
  return out;
}

CornerMap identity_map(const PolygonalDomain& domain, const meshgen::SimplicialMesh& mesh) {
  CornerMap map;
  map.source = domain;
  map.target = domain;
  for (const auto& t : mesh.triangles) {
    AffinePiece piece;
    piece.source = {mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]};
    map.pieces.push_back(piece);
  }
  for (const auto& c : polygeom::interior_angles(domain))
    map.assignments.push_back({"corner", c.position, c.position});
  return map;
}

LipschitzReport lipschitz_after_scaling(const CornerMap& map, double r) {
  if (!(r > 0.0)) throw ValidationError("scale factor must be positive");
  LipschitzReport rep;
  for (const auto& p : map.pieces) rep.r0 = std::max(rep.r0, p.max_singular_value());
  rep.max_singular_value = rep.r0 / r;
  return rep;
}

CornerMap move_source(const CornerMap& map, double angle, Point2 shift) {
  const double c = std::cos(angle), s = std::sin(angle);
  Eigen::Matrix2d rot;
  rot << c, -s, s, c;
  auto move = [&](Point2 p) { return Point2{c * p.x - s * p.y + shift.x, s * p.x + c * p.y + shift.y}; };
  CornerMap out = map;
  out.source = polygeom::rigid_motion(map.source, angle, shift);
  for (auto& p : out.pieces) {
    for (auto& v : p.source) v = move(v);
    p.linear = p.linear * rot.transpose();
    const Eigen::Vector2d t = Eigen::Vector2d(p.translation.x, p.translation.y) -
                              p.linear * Eigen::Vector2d(shift.x, shift.y);
    p.translation = {t(0), t(1)};
  }
  for (auto& a : out.assignments) a.source = move(a.source);
  for (auto& f : out.fold_edges) f = {move(f[0]), move(f[1])};
  return out;
}

void write_map(std::ostream& out, const CornerMap& map) {
  const auto old = out.precision();
  out << std::setprecision(17);
  out << "# piece sx0 sy0 sx1 sy1 sx2 sy2 a11 a12 b1 a21 a22 b2\n";
  out << "scale " << map.scale_factor << '\n';
  for (const auto& p : map.pieces) {
    out << "piece";
    for (const auto& v : p.source) out << ' ' << v.x << ' ' << v.y;
    out << ' ' << p.linear(0, 0) << ' ' << p.linear(0, 1) << ' ' << p.translation.x << ' ' << p.linear(1, 0)
        << ' ' << p.linear(1, 1) << ' ' << p.translation.y << '\n';
  }
  out.precision(old);
}

CornerMap read_map(std::istream& in) {
  CornerMap map;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "scale") {
      if (!(ls >> map.scale_factor)) throw ValidationError("malformed scale line");
    } else if (word == "piece") {
      AffinePiece p;
      for (auto& v : p.source) ls >> v.x >> v.y;
      ls >> p.linear(0, 0) >> p.linear(0, 1) >> p.translation.x >> p.linear(1, 0) >> p.linear(1, 1) >>
          p.translation.y;
      if (!ls) throw ValidationError("malformed piece line");
      map.pieces.push_back(p);
    } else {
      throw ValidationError("unknown corner map record: " + word);
    }
  }
  return map;
}

}  // namespace cornerindex::cornermap
