#pragma once

// Lowest-order Whitney complex on a SimplicialMesh: incidence operators,
// mass matrices, codifferentials, Hodge Laplacians by degree and the absolute
// boundary condition with minimal or maximal vertex treatment.

#include <array>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "cornerindex/mesh.hpp"

namespace cornerindex::dec {

using SparseMatrix = Eigen::SparseMatrix<double>;
using Vector = Eigen::VectorXd;

struct Cochain {
  int degree = 0;
  Vector values;
};

/// Cochains of degrees 0, 1, 2.
using GradedCochain = std::array<Vector, 3>;

enum class VertexTreatment { maximal, minimal };

/// Absolute boundary conditions. They are natural in the Whitney
/// discretization, so `maximal` constrains nothing; `minimal` removes every
/// degree of freedom meeting the open disk of radius `rho` around a corner.
struct BoundaryConditionSpec {
  VertexTreatment treatment = VertexTreatment::maximal;
  double rho = 0.0;

  static BoundaryConditionSpec maximal() { return {}; }
  static BoundaryConditionSpec minimal(double rho) { return {VertexTreatment::minimal, rho}; }
  std::string describe() const;
};

using Factorization = Eigen::SimplicialLDLT<SparseMatrix>;

struct HodgeSystem {
  std::shared_ptr<const meshgen::SimplicialMesh> mesh;
  SparseMatrix d0;  ///< E x V
  SparseMatrix d1;  ///< F x E
  std::array<SparseMatrix, 3> mass;
  BoundaryConditionSpec bc;
  std::array<std::vector<int>, 3> constrained;
  /// Full index -> free index, -1 when constrained.
  std::array<std::vector<int>, 3> free_index;
  std::array<std::vector<int>, 3> free_dofs;
  std::array<std::shared_ptr<Factorization>, 3> mass_solver;

  std::size_t size(int degree) const { return free_index[degree].size(); }
  std::size_t free_size(int degree) const { return free_dofs[degree].size(); }
  /// Full-space d_k (k = 0, 1).
  const SparseMatrix& d(int k) const { return k == 0 ? d0 : d1; }
  /// Selection matrix full x free for `degree`.
  SparseMatrix prolongation(int degree) const;
  Vector restrict(int degree, const Vector& full) const;
  Vector extend(int degree, const Vector& free) const;
  Vector mass_solve(int degree, const Vector& rhs) const;
  /// Codifferential delta_k = M_{k-1}^{-1} d_{k-1}^T M_k on full cochains (k = 1, 2).
  Vector codifferential(int degree, const Vector& full) const;
};

/// Throws AssemblyError when a boundary edge is untagged.
HodgeSystem assemble(const meshgen::SimplicialMesh& mesh, const BoundaryConditionSpec& bc);

/// Hodge Laplacian of one degree as the pencil (K, M) on the free degrees of
/// freedom of that degree; neighbouring degrees keep their full spaces.
/// K = U^T W U + B N^{-1} B^T is kept in factored form with U = d_k P,
/// W = M_{k+1}, B = P^T M_k d_{k-1}, N = M_{k-1}.
/// `up` or `down` is empty at the ends of the complex.
struct LaplacianPencil {
  int degree = 0;
  SparseMatrix mass;   ///< P^T M_k P
  SparseMatrix up;     ///< U
  SparseMatrix up_weight;  ///< W
  SparseMatrix down;   ///< B
  SparseMatrix down_weight;  ///< N
  std::shared_ptr<Factorization> down_solver;  ///< factorization of N

  std::size_t size() const { return static_cast<std::size_t>(mass.rows()); }
  bool has_up() const { return up.size() > 0 && up.rows() > 0; }
  bool has_down() const { return down.size() > 0 && down.cols() > 0; }
  Vector apply_stiffness(const Vector& x) const;
  /// Sparse K when it has no inverse-mass term (degree 0, or an empty down part).
  SparseMatrix explicit_stiffness() const;
};

LaplacianPencil hodge_laplacian(const HodgeSystem& system, int degree);

/// (delta w1, d w0 + delta w2, d w1) on full cochains. Throws ConstraintError
/// when an input is nonzero on a constrained degree of freedom. Outputs are
/// not projected onto the free spaces.
GradedCochain apply_dirac(const HodgeSystem& system, const GradedCochain& input);

/// Mass inner product <a, b>_{M_k} of full cochains.
double inner(const HodgeSystem& system, int degree, const Vector& a, const Vector& b);

// de Rham interpolation of smooth forms.
using ScalarField = std::function<double(Point2)>;
Vector interpolate0(const meshgen::SimplicialMesh& mesh, const ScalarField& f);
/// Edge integrals of f dx + g dy along edges oriented lower -> higher.
Vector interpolate1(const meshgen::SimplicialMesh& mesh, const ScalarField& f, const ScalarField& g);
/// Triangle integrals of h dx dy.
Vector interpolate2(const meshgen::SimplicialMesh& mesh, const ScalarField& h);

/// Coordinate format: one `row col value` line per stored entry.
void write_coo(std::ostream& out, const SparseMatrix& matrix);

}  // namespace cornerindex::dec
