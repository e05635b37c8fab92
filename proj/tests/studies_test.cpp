#include "cornerindex/acceptance.hpp"
#include "cornerindex/domains.hpp"
#include "cornerindex/errors.hpp"
#include "cornerindex/studies.hpp"
#include "doctest.h"

using namespace cornerindex;
using report::Verdict;

namespace {

const studies::SpectralGrid& coarse_grid() {
  static const auto grid = studies::spectral_grid(domains::corner_annulus(), {0.4, 0.2}, {0.2, 0.1});
  return grid;
}

}  // namespace

TEST_SUITE("studies") {
  TEST_CASE("grids must be non-empty and strictly decreasing") {
    const auto a = domains::corner_annulus();
    CHECK_THROWS_AS(studies::spectral_grid(a, {}, {0.2}), ValidationError);
    CHECK_THROWS_AS(studies::spectral_grid(a, {0.2, 0.4}, {0.2}), ValidationError);
    CHECK_THROWS_AS(studies::spectral_grid(a, {0.4}, {0.1, 0.1}), ValidationError);
    CHECK_THROWS_AS(studies::spectral_grid(a, {0.4}, {}), ValidationError);
    CHECK_THROWS_AS(studies::spectral_grid(a, {-0.4}, {0.1}), ValidationError);
  }

  TEST_CASE("index on a coarse grid of A") {
    const auto& grid = coarse_grid();
    CHECK(grid.euler_characteristic == 0);
    const auto st = studies::index_study(grid);
    CHECK(st.verdict == Verdict::pass);
    REQUIRE(st.points.size() == 4);
    for (const auto& p : st.points) {
      REQUIRE(p.index.has_value());
      CHECK(*p.index == 1);
      CHECK(*p.index != grid.euler_characteristic);
      REQUIRE(p.control_index.has_value());
      CHECK(*p.control_index == 0);
      CHECK(*p.even_kernel == 1);
      CHECK(*p.odd_kernel_max == 1);
      CHECK(*p.odd_kernel_min == 0);
    }
    // Claiming index 0 fails on the same data.
    CHECK(studies::index_study(grid, 0).verdict == Verdict::fail);
  }

  TEST_CASE("gap study on a coarse grid of A") {
    const auto st = studies::gap_study(coarse_grid());
    REQUIRE(st.series.size() == 2);
    for (const auto& s : st.series) {
      CHECK(s.certified_nonzero);
      CHECK(s.stabilized > 1.0);
      CHECK(s.relative_change < 0.1);
    }
    CHECK(st.c > 0.0);
    for (double l : st.maximal_lambda_min) CHECK(l <= 1e-10);
    CHECK(st.verdict == Verdict::pass);
  }

  TEST_CASE("tables have fixed headers") {
    const auto index = studies::index_study(coarse_grid());
    const auto rows = studies::rows_table(index);
    CHECK(rows.header().front() == "degree");
    CHECK(rows.header().back() == "verdict");
    CHECK(rows.row_count() == 2 * (3 + 2));
    CHECK(studies::index_table(index).row_count() == 4);
    const auto gap = studies::gap_table(studies::gap_study(coarse_grid()));
    CHECK(gap.header() == std::vector<std::string>{"rho", "h", "lambda_min", "relative_change", "certified_nonzero"});
  }

  TEST_CASE("fast acceptance criteria") {
    for (const auto& r : {acceptance::euler_characteristics(), acceptance::capacity_energy_grid(),
                          acceptance::defect_and_schedule(), acceptance::bochner(), acceptance::corner_turning(),
                          acceptance::corner_map()}) {
      INFO(acceptance::format_line(r));
      CHECK(r.verdict == Verdict::pass);
    }
    const auto line = acceptance::format_line(acceptance::corner_turning());
    CHECK(line.rfind("criterion 8 PASS ", 0) == 0);
  }
}
