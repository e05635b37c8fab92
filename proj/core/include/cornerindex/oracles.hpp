#pragma once

// Closed forms and quadratures for the cut-off family
// f(r) = 1 - eps^alpha r^-alpha on a cone sector, and the integration by
// parts identity for 1-forms on the corner annulus.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cornerindex/geometry.hpp"

namespace cornerindex::oracles {

/// Sector {r < 1, |phi| < beta}, cut-off radius eps, exponent alpha.
struct CapacityParams {
  double alpha = 0.5;
  double epsilon = 0.25;
  double beta = 0.0;

  /// Throws ValidationError outside 0 < eps < 1, alpha > 0, 0 < beta <= pi.
  void validate() const;
};

struct QuadratureSettings {
  std::size_t points = 16;  ///< Gauss-Legendre points per panel and axis
  std::size_t max_doublings = 12;
  double tolerance = 1e-13;  ///< relative change that ends panel doubling
};

struct CapacityEnergy {
  double closed_form = 0.0;
  double quadrature = 0.0;
};

/// Dirichlet energy of f over the sector; closed form beta alpha (1 - eps^(2 alpha)).
CapacityEnergy capacity_energy(const CapacityParams& p, const QuadratureSettings& q = {});

struct L2Defect {
  double quadrature = 0.0;
  double bound = 0.0;  ///< beta eps + beta eps^alpha
};

L2Defect l2_defect(const CapacityParams& p, const QuadratureSettings& q = {});

struct Schedule {
  double alpha = 0.0;
  double epsilon = 0.0;  ///< alpha^(1/alpha), evaluated in the log domain
  double energy = 0.0;
  double defect = 0.0;
  double h1_defect_sq = 0.0;  ///< energy + defect
};

/// Requires 0 < alpha < 1.
Schedule capacity_schedule(double alpha, double beta, const QuadratureSettings& q = {});

/// The cut-off function itself, for sampling onto meshes.
double cutoff(const CapacityParams& p, double r);

// ---------------------------------------------------------------------------
// 1-forms f dx + g dy on A = [-2,2]^2 minus (-1,1)^2.

struct TestForm {
  using Field = std::function<double(Point2)>;
  std::string label;
  Field f, g, fx, fy, gx, gy;
  /// f = 0 on vertical edges, g = 0 on horizontal edges, support away from the corners.
  bool bc_compliant = false;
  /// Extra quadrature breakpoints where the form is only piecewise smooth.
  std::vector<double> x_breaks, y_breaks;
};

struct BochnerResult {
  double lhs = 0.0;  ///< |(d + d*) w|^2
  double rhs = 0.0;  ///< |grad f|^2 + |grad g|^2
  double boundary_residual = 0.0;  ///< lhs - rhs
};

BochnerResult bochner_identity(const TestForm& form, const QuadratureSettings& q = {});

/// Sum of tensor-product quintic bumps in the four arms of A, compliant by
/// construction. Deterministic in `seed`.
TestForm random_compliant_form(std::uint64_t seed);

/// The three boundary-condition violations: (y, x), (y^3, x^3), (y(x+3), x).
std::vector<TestForm> violating_forms();

/// f = g = 0.
TestForm zero_form();

/// Integral of a function over A by tensor Gauss-Legendre on its eight unit
/// cells, split further at the given breakpoints.
double integrate_annulus(const std::function<double(Point2)>& h, const std::vector<double>& x_breaks,
                         const std::vector<double>& y_breaks, const QuadratureSettings& q = {});

}  // namespace cornerindex::oracles
