#pragma once

// The nine end-to-end acceptance criteria, shared by the `all` subcommand and
// the acceptance test binary.

#include <optional>
#include <string>
#include <vector>

#include "cornerindex/studies.hpp"

namespace cornerindex::acceptance {

using report::Verdict;

struct CriterionResult {
  int id = 0;
  std::string title;
  Verdict verdict = Verdict::fail;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct AcceptanceOptions {
  std::vector<double> spectral_hs{0.1, 0.05};
  std::vector<double> rhos{0.2, 0.1, 0.05};
  studies::StudyOptions study;
  /// A criterion over its runtime budget fails.
  bool enforce_budgets = true;
};

struct AcceptanceReport {
  std::vector<CriterionResult> results;
  Verdict verdict = Verdict::pass;
  std::optional<studies::SpectralGrid> grid;
};

/// Runs the criteria in `only` (all nine when empty). Criteria 5 to 7 share
/// one spectral grid. Module errors turn into FAIL lines, never exceptions.
AcceptanceReport run(const AcceptanceOptions& options = {}, const std::vector<int>& only = {});

CriterionResult euler_characteristics();
CriterionResult capacity_energy_grid();
CriterionResult defect_and_schedule();
CriterionResult bochner();
CriterionResult kernels(const studies::SpectralGrid& grid);
CriterionResult index(const studies::SpectralGrid& grid);
CriterionResult spectral_gap(const studies::SpectralGrid& grid);
CriterionResult corner_turning();
CriterionResult corner_map();

/// `criterion <id> <PASS|FAIL|INCONCLUSIVE> <seconds>s <title>: <detail>`
std::string format_line(const CriterionResult& result);

}  // namespace cornerindex::acceptance
