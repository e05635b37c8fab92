#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "cornerindex/errors.hpp"
#include "cornerindex/mesh.hpp"

namespace cornerindex::meshgen {

void write_off(std::ostream& out, const SimplicialMesh& mesh) {
  const auto old_precision = out.precision();
  out << std::setprecision(17);
  out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.triangles.size() << ' ' << mesh.edges.size() << '\n';
  for (const auto& p : mesh.vertices) out << p.x << ' ' << p.y << " 0\n";
  for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  out.precision(old_precision);
}

SimplicialMesh read_off(std::istream& in, const PolygonalDomain& domain) {
  auto next_line = [&in](std::string& line) {
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  std::string line;
  if (!next_line(line) || line.rfind("OFF", 0) != 0) throw RefinementError("missing OFF header");
  if (!next_line(line)) throw RefinementError("missing OFF counts");
  std::size_t nv = 0, nf = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> nv >> nf)) throw RefinementError("malformed OFF counts");
  }
  std::vector<Point2> vertices(nv);
  for (auto& p : vertices) {
    if (!next_line(line)) throw RefinementError("truncated OFF vertex list");
    std::istringstream ls(line);
    if (!(ls >> p.x >> p.y)) throw RefinementError("malformed OFF vertex");
  }
  std::vector<std::array<int, 3>> triangles(nf);
  for (auto& t : triangles) {
    if (!next_line(line)) throw RefinementError("truncated OFF face list");
    std::istringstream ls(line);
    int n = 0;
    if (!(ls >> n >> t[0] >> t[1] >> t[2]) || n != 3) throw RefinementError("only triangular OFF faces are supported");
  }
  return tag_boundary(make_mesh(std::move(vertices), std::move(triangles), domain), domain);
}

void write_tags(std::ostream& out, const SimplicialMesh& mesh, const std::vector<VertexDisk>& disks) {
  const auto old_precision = out.precision();
  out << std::setprecision(17);
  out << "# boundary edges: edge <v0> <v1> <tag> <domain-edge>\n";
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
    if (!mesh.is_boundary_edge(e)) continue;
    out << "edge " << mesh.edges[e][0] << ' ' << mesh.edges[e][1] << ' ' << to_string(mesh.boundary_tags[e])
        << ' ' << mesh.edge_boundary_segment[e] << '\n';
  }
  out << "# corners: corner <vertex> <domain-corner>\n";
  for (std::size_t v = 0; v < mesh.corner_flags.size(); ++v)
    if (mesh.corner_flags[v] >= 0) out << "corner " << v << ' ' << mesh.corner_flags[v] << '\n';
  if (!disks.empty()) out << "# disks: disk <cx> <cy> <rho> then vertices/edges/triangles member lines\n";
  for (const auto& d : disks) {
    out << "disk " << d.center.x << ' ' << d.center.y << ' ' << d.radius << '\n';
    auto list = [&out](const char* label, const std::vector<int>& ids) {
      out << label;
      for (int i : ids) out << ' ' << i;
      out << '\n';
    };
    list("vertices", d.vertices);
    list("edges", d.edges);
    list("triangles", d.triangles);
  }
  out.precision(old_precision);
}

}  // namespace cornerindex::meshgen
