#pragma once

// Lowest eigenpairs of symmetric pencils near zero and gap-certified kernel
// counting.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "cornerindex/deccomplex.hpp"

namespace cornerindex::spectral {

using dec::SparseMatrix;

struct SolverOptions {
  std::size_t m = 6;
  /// Block size of the subspace iteration; 0 picks m + 6.
  std::size_t block = 0;
  double tol = 1e-8;
  /// Negative shift of the shift-invert operator.
  double shift = -0.05;
  std::uint64_t seed = 0;
  std::size_t max_iterations = 10000;
};

struct Eigenpairs {
  std::vector<double> values;  ///< ascending
  Eigen::MatrixXd vectors;     ///< M-orthonormal columns
  std::vector<double> residuals;  ///< |K v - lambda M v|_{M^-1}
  std::size_t iterations = 0;
};

/// m smallest eigenpairs of K v = lambda M v. Throws SolverError with the
/// worst residual when the iteration cap is reached.
Eigenpairs low_spectrum(const SparseMatrix& stiffness, const SparseMatrix& mass, const SolverOptions& options);
Eigenpairs low_spectrum(const dec::LaplacianPencil& pencil, const SolverOptions& options);

struct KernelRule {
  double relative_cutoff = 1e-9;
  double min_gap_ratio = 1e3;
};

struct KernelCount {
  std::optional<std::size_t> count;  ///< empty when AMBIGUOUS
  double tau = 0.0;
  double gap_ratio = 0.0;

  bool ambiguous() const { return !count.has_value(); }
};

/// tau = cutoff * median of the upper half of `values`; counts values below
/// tau and requires values[k] / max(values[k-1], tau) >= min_gap_ratio.
KernelCount kernel_dimension(const std::vector<double>& values, const KernelRule& rule = {});

struct SpectralReport {
  int degree = 0;
  std::string bc;
  double h = 0.0;
  double rho = 0.0;
  std::size_t dofs = 0;
  std::vector<double> eigenvalues;
  KernelCount kernel;
  double max_residual = 0.0;
  std::size_t iterations = 0;
  double wall_time = 0.0;
};

SpectralReport analyze(const dec::HodgeSystem& system, int degree, const SolverOptions& options = {},
                       const KernelRule& rule = {});

}  // namespace cornerindex::spectral
