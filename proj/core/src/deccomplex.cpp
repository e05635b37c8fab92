#include "cornerindex/deccomplex.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cornerindex/errors.hpp"
#include "cornerindex/quadrature.hpp"

namespace cornerindex::dec {

namespace {

using Triplet = Eigen::Triplet<double>;

SparseMatrix from_triplets(Eigen::Index rows, Eigen::Index cols, const std::vector<Triplet>& t) {
  SparseMatrix m(rows, cols);
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();
  return m;
}

std::shared_ptr<Factorization> factor(const SparseMatrix& m, const char* what) {
  auto f = std::make_shared<Factorization>(m);
  if (f->info() != Eigen::Success) throw AssemblyError(std::string("factorization of ") + what + " failed");
  return f;
}

// Barycentric gradients and area of a counterclockwise triangle.
struct Element {
  std::array<Point2, 3> grad;
  double area;
};

Element element(const meshgen::SimplicialMesh& mesh, std::size_t t) {
  const auto& tri = mesh.triangles[t];
  const Point2 p0 = mesh.vertices[tri[0]], p1 = mesh.vertices[tri[1]], p2 = mesh.vertices[tri[2]];
  const double twice = orient2d(p0, p1, p2);
  auto perp = [twice](Point2 a, Point2 b) {  // gradient of the coordinate opposite edge (a, b)
    const Point2 e = b - a;
    return Point2{-e.y / twice, e.x / twice};
  };
  return {{perp(p1, p2), perp(p2, p0), perp(p0, p1)}, 0.5 * twice};
}

}  // namespace

std::string BoundaryConditionSpec::describe() const {
  if (treatment == VertexTreatment::maximal) return "absolute/maximal";
  std::ostringstream s;
  s << "absolute/minimal(rho=" << rho << ')';
  return s.str();
}

SparseMatrix HodgeSystem::prolongation(int degree) const {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < free_dofs[degree].size(); ++i)
    t.emplace_back(free_dofs[degree][i], static_cast<int>(i), 1.0);
  return from_triplets(static_cast<Eigen::Index>(size(degree)), static_cast<Eigen::Index>(free_size(degree)), t);
}

Vector HodgeSystem::restrict(int degree, const Vector& full) const {
  Vector out(static_cast<Eigen::Index>(free_size(degree)));
  for (std::size_t i = 0; i < free_dofs[degree].size(); ++i) out(static_cast<Eigen::Index>(i)) = full(free_dofs[degree][i]);
  return out;
}

Vector HodgeSystem::extend(int degree, const Vector& free) const {
  Vector out = Vector::Zero(static_cast<Eigen::Index>(size(degree)));
  for (std::size_t i = 0; i < free_dofs[degree].size(); ++i) out(free_dofs[degree][i]) = free(static_cast<Eigen::Index>(i));
  return out;
}

Vector HodgeSystem::mass_solve(int degree, const Vector& rhs) const { return mass_solver[degree]->solve(rhs); }

Vector HodgeSystem::codifferential(int degree, const Vector& full) const {
  if (degree < 1 || degree > 2) throw AssemblyError("codifferential is defined for degrees 1 and 2");
  const Vector rhs = d(degree - 1).transpose() * (mass[degree] * full);
  return mass_solve(degree - 1, rhs);
}

HodgeSystem assemble(const meshgen::SimplicialMesh& mesh, const BoundaryConditionSpec& bc) {
  for (std::size_t e = 0; e < mesh.edges.size(); ++e)
    if (mesh.is_boundary_edge(e) && mesh.boundary_tags[e] == meshgen::BoundaryTag::untagged)
      throw AssemblyError("boundary edge " + std::to_string(e) + " is untagged");
  if (bc.treatment == VertexTreatment::minimal && !(bc.rho >= 0.0))
    throw AssemblyError("minimal treatment needs a non-negative radius");

  HodgeSystem sys;
  sys.mesh = std::make_shared<const meshgen::SimplicialMesh>(mesh);
  sys.bc = bc;
  const auto nv = static_cast<Eigen::Index>(mesh.vertices.size());
  const auto ne = static_cast<Eigen::Index>(mesh.edges.size());
  const auto nf = static_cast<Eigen::Index>(mesh.triangles.size());

  std::vector<Triplet> t;
  t.reserve(2 * mesh.edges.size());
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
    t.emplace_back(static_cast<int>(e), mesh.edges[e][0], -1.0);
    t.emplace_back(static_cast<int>(e), mesh.edges[e][1], 1.0);
  }
  sys.d0 = from_triplets(ne, nv, t);

  t.clear();
  for (std::size_t f = 0; f < mesh.triangles.size(); ++f)
    for (int k = 0; k < 3; ++k)
      t.emplace_back(static_cast<int>(f), mesh.triangle_edges[f][k], mesh.triangle_edge_signs[f][k]);
  sys.d1 = from_triplets(nf, ne, t);

  std::vector<Triplet> m0, m1, m2;
  m0.reserve(9 * mesh.triangles.size());
  m1.reserve(9 * mesh.triangles.size());
  for (std::size_t f = 0; f < mesh.triangles.size(); ++f) {
    const auto el = element(mesh, f);
    const auto& tri = mesh.triangles[f];
    auto lam = [&el](int i, int j) { return el.area * (i == j ? 2.0 : 1.0) / 12.0; };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m0.emplace_back(tri[i], tri[j], lam(i, j));
    // Whitney function of local edge k: lambda_a grad lambda_b - lambda_b grad lambda_a, a = k, b = k + 1.
    for (int p = 0; p < 3; ++p) {
      const int a = p, b = (p + 1) % 3;
      for (int q = 0; q < 3; ++q) {
        const int c = q, d = (q + 1) % 3;
        const double v = lam(a, c) * dot(el.grad[b], el.grad[d]) - lam(a, d) * dot(el.grad[b], el.grad[c]) -
                         lam(b, c) * dot(el.grad[a], el.grad[d]) + lam(b, d) * dot(el.grad[a], el.grad[c]);
        m1.emplace_back(mesh.triangle_edges[f][p], mesh.triangle_edges[f][q],
                        mesh.triangle_edge_signs[f][p] * mesh.triangle_edge_signs[f][q] * v);
      }
    }
    m2.emplace_back(static_cast<int>(f), static_cast<int>(f), 1.0 / el.area);
  }
  sys.mass[0] = from_triplets(nv, nv, m0);
  sys.mass[1] = from_triplets(ne, ne, m1);
  sys.mass[2] = from_triplets(nf, nf, m2);
  sys.mass_solver[0] = factor(sys.mass[0], "M0");
  sys.mass_solver[1] = factor(sys.mass[1], "M1");
  sys.mass_solver[2] = factor(sys.mass[2], "M2");

  std::array<std::vector<char>, 3> hit{std::vector<char>(static_cast<std::size_t>(nv), 0),
                                       std::vector<char>(static_cast<std::size_t>(ne), 0),
                                       std::vector<char>(static_cast<std::size_t>(nf), 0)};
  if (bc.treatment == VertexTreatment::minimal && bc.rho > 0.0) {
    std::vector<polygeom::CornerVertex> corners;
    for (std::size_t v = 0; v < mesh.corner_flags.size(); ++v)
      if (mesh.corner_flags[v] >= 0) corners.push_back({mesh.vertices[v], 0.0, false, 0, v});
    for (std::size_t i = 0; i < corners.size(); ++i)
      for (std::size_t j = i + 1; j < corners.size(); ++j)
        if (bc.rho > 0.5 * distance(corners[i].position, corners[j].position))
          throw GeometryError("disk radius exceeds half the distance between two corners");
    for (const auto& c : corners) {
      const auto disk = meshgen::vertex_disk(mesh, c, bc.rho);
      for (int v : disk.vertices) hit[0][v] = 1;
      for (int e : disk.edges) hit[1][e] = 1;
      for (int f : disk.triangles) hit[2][f] = 1;
    }
  }
  for (int k = 0; k < 3; ++k) {
    sys.free_index[k].assign(hit[k].size(), -1);
    for (std::size_t i = 0; i < hit[k].size(); ++i) {
      if (hit[k][i]) {
        sys.constrained[k].push_back(static_cast<int>(i));
      } else {
        sys.free_index[k][i] = static_cast<int>(sys.free_dofs[k].size());
        sys.free_dofs[k].push_back(static_cast<int>(i));
      }
    }
  }
  return sys;
}

Vector LaplacianPencil::apply_stiffness(const Vector& x) const {
  Vector y = Vector::Zero(x.size());
  if (has_up()) y += up.transpose() * (up_weight * (up * x));
  if (has_down()) y += down * down_solver->solve(Vector(down.transpose() * x));
  return y;
}

SparseMatrix LaplacianPencil::explicit_stiffness() const {
  if (has_down()) throw AssemblyError("stiffness with an inverse mass term has no sparse form");
  if (!has_up()) return SparseMatrix(mass.rows(), mass.cols());
  SparseMatrix k = SparseMatrix(up.transpose()) * up_weight * up;
  k.makeCompressed();
  return k;
}

LaplacianPencil hodge_laplacian(const HodgeSystem& system, int degree) {
  if (degree < 0 || degree > 2) throw AssemblyError("degree must be 0, 1 or 2");
  LaplacianPencil p;
  p.degree = degree;
  const SparseMatrix prol = system.prolongation(degree);
  const SparseMatrix prolT = prol.transpose();
  p.mass = prolT * system.mass[degree] * prol;
  if (degree < 2) {
    p.up = system.d(degree) * prol;
    p.up_weight = system.mass[degree + 1];
  }
  if (degree > 0) {
    p.down = prolT * system.mass[degree] * system.d(degree - 1);
    p.down_weight = system.mass[degree - 1];
    p.down_solver = system.mass_solver[degree - 1];
  }
  return p;
}

GradedCochain apply_dirac(const HodgeSystem& system, const GradedCochain& input) {
  for (int k = 0; k < 3; ++k) {
    if (static_cast<std::size_t>(input[k].size()) != system.size(k))
      throw ConstraintError("cochain of degree " + std::to_string(k) + " has the wrong length");
    for (int i : system.constrained[k])
      if (input[k](i) != 0.0)
        throw ConstraintError("degree " + std::to_string(k) + " input is nonzero on constrained dof " +
                              std::to_string(i));
  }
  GradedCochain out;
  out[0] = system.codifferential(1, input[1]);
  out[1] = system.d0 * input[0] + system.codifferential(2, input[2]);
  out[2] = system.d1 * input[1];
  return out;
}

double inner(const HodgeSystem& system, int degree, const Vector& a, const Vector& b) {
  return a.dot(system.mass[degree] * b);
}

Vector interpolate0(const meshgen::SimplicialMesh& mesh, const ScalarField& f) {
  Vector out(static_cast<Eigen::Index>(mesh.vertices.size()));
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) out(static_cast<Eigen::Index>(v)) = f(mesh.vertices[v]);
  return out;
}

Vector interpolate1(const meshgen::SimplicialMesh& mesh, const ScalarField& f, const ScalarField& g) {
  static const auto rule = quadrature::gauss_legendre(6);
  Vector out(static_cast<Eigen::Index>(mesh.edges.size()));
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
    const Point2 a = mesh.vertices[mesh.edges[e][0]], b = mesh.vertices[mesh.edges[e][1]];
    const Point2 t = b - a;
    double s = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const Point2 p = a + 0.5 * (1.0 + rule.nodes[q]) * t;
      s += 0.5 * rule.weights[q] * (f(p) * t.x + g(p) * t.y);
    }
    out(static_cast<Eigen::Index>(e)) = s;
  }
  return out;
}

Vector interpolate2(const meshgen::SimplicialMesh& mesh, const ScalarField& h) {
  static const auto rule = quadrature::gauss_legendre(6);
  Vector out(static_cast<Eigen::Index>(mesh.triangles.size()));
  for (std::size_t f = 0; f < mesh.triangles.size(); ++f) {
    const auto& tri = mesh.triangles[f];
    const Point2 p0 = mesh.vertices[tri[0]], p1 = mesh.vertices[tri[1]], p2 = mesh.vertices[tri[2]];
    const double twice = orient2d(p0, p1, p2);
    // Collapsed square: x = p0 + u (p1 - p0) + u v (p2 - p1), Jacobian twice * u.
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double u = 0.5 * (1.0 + rule.nodes[i]);
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double v = 0.5 * (1.0 + rule.nodes[j]);
        const Point2 p = p0 + u * (p1 - p0) + (u * v) * (p2 - p1);
        s += 0.25 * rule.weights[i] * rule.weights[j] * u * h(p);
      }
    }
    out(static_cast<Eigen::Index>(f)) = s * twice;
  }
  return out;
}

void write_coo(std::ostream& out, const SparseMatrix& matrix) {
  const auto old = out.precision();
  out << std::setprecision(17);
  out << "# " << matrix.rows() << ' ' << matrix.cols() << ' ' << matrix.nonZeros() << '\n';
  for (int k = 0; k < matrix.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(matrix, k); it; ++it)
      out << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
  out.precision(old);
}

}  // namespace cornerindex::dec
