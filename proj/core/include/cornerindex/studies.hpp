#pragma once

// Refinement studies over (h, rho) grids: index of the even/odd split and the
// lowest minimal 1-form eigenvalue.

#include <optional>
#include <string>
#include <vector>

#include "cornerindex/mesh.hpp"
#include "cornerindex/report.hpp"
#include "cornerindex/spectral.hpp"

namespace cornerindex::studies {

using report::Verdict;

struct StudyOptions {
  spectral::SolverOptions solver;
  spectral::KernelRule rule;
  double grading = 2.0;
  bool structured = false;
};

/// One mesh level: maximal reports for degrees 0, 1, 2 and one minimal
/// degree-1 report per rho.
struct GridLevel {
  double h = 0.0;  ///< requested
  double mesh_h = 0.0;  ///< longest edge
  std::size_t vertices = 0, edges = 0, triangles = 0;
  std::array<spectral::SpectralReport, 3> maximal;
  std::vector<spectral::SpectralReport> minimal;
};

struct SpectralGrid {
  std::string domain;
  int euler_characteristic = 0;
  std::vector<double> hs;    ///< strictly decreasing
  std::vector<double> rhos;  ///< strictly decreasing
  std::vector<GridLevel> levels;
};

/// Throws ValidationError for empty or non-decreasing series.
SpectralGrid spectral_grid(const polygeom::PolygonalDomain& domain, const std::vector<double>& hs,
                           const std::vector<double>& rhos, const StudyOptions& options = {});

/// Fixed-column spectral table: degree, h, rho, bc, lambda_1..lambda_m,
/// kernel_count, gap_ratio, verdict.
struct StudyRow {
  int degree = 0;
  double h = 0.0;
  double rho = 0.0;
  std::string bc;
  std::vector<double> eigenvalues;
  std::optional<std::size_t> kernel_count;
  double gap_ratio = 0.0;
  Verdict verdict = Verdict::pass;
};

struct IndexPoint {
  double h = 0.0;
  double rho = 0.0;
  std::optional<long> even_kernel;      ///< degree 0 + degree 2, maximal
  std::optional<long> odd_kernel_min;   ///< degree 1, minimal(rho)
  std::optional<long> odd_kernel_max;   ///< degree 1, maximal
  std::optional<long> index;            ///< even - odd minimal
  std::optional<long> control_index;    ///< even - odd maximal
  Verdict verdict = Verdict::pass;
};

struct RefinementStudy {
  std::string domain;
  std::vector<StudyRow> rows;
  Verdict verdict = Verdict::pass;
  std::vector<std::string> notes;
};

struct IndexStudy : RefinementStudy {
  int euler_characteristic = 0;
  long expected = 1;
  std::vector<IndexPoint> points;
};

/// PASS when every grid point has index == expected, and index != chi
/// everywhere unless chi == expected. Ambiguous kernels make it INCONCLUSIVE.
IndexStudy index_study(const SpectralGrid& grid, long expected = 1);

struct GapSeries {
  double rho = 0.0;
  std::vector<double> hs;
  std::vector<double> lambda_min;
  double relative_change = 0.0;  ///< between the two finest levels
  double stabilized = 0.0;       ///< value on the finest level
  bool certified_nonzero = false;
};

struct GapStudy : RefinementStudy {
  std::vector<GapSeries> series;
  std::vector<double> maximal_lambda_min;  ///< per level
  double c = 0.0;                          ///< min stabilized value
  double max_relative_change = 0.1;
  double min_successive_ratio = 0.5;
};

/// Per rho: |change| < 10% between the two finest levels and a certified
/// zero kernel; stabilized values over the rho series never drop below half
/// their predecessor; maximal lambda_min <= 1e-10 on every level.
GapStudy gap_study(const SpectralGrid& grid);

report::CsvTable rows_table(const RefinementStudy& study);
report::CsvTable index_table(const IndexStudy& study);
report::CsvTable gap_table(const GapStudy& study);
std::string gap_plot(const GapStudy& study);
std::string index_plot(const IndexStudy& study);

}  // namespace cornerindex::studies
