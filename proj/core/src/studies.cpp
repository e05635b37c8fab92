#include "cornerindex/studies.hpp"

#include <algorithm>
#include <cmath>

#include "cornerindex/errors.hpp"

namespace cornerindex::studies {

namespace {

void check_decreasing(const std::vector<double>& v, const char* what) {
  if (v.empty()) throw ValidationError(std::string(what) + " series is empty");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0)) throw ValidationError(std::string(what) + " values must be positive");
    if (i > 0 && !(v[i] < v[i - 1])) throw ValidationError(std::string(what) + " series must strictly decrease");
  }
}

std::optional<long> count(const spectral::SpectralReport& r) {
  if (r.kernel.ambiguous()) return std::nullopt;
  return static_cast<long>(*r.kernel.count);
}

StudyRow row_of(const spectral::SpectralReport& r, double h) {
  StudyRow row;
  row.degree = r.degree;
  row.h = h;
  row.rho = r.rho;
  row.bc = r.bc;
  row.eigenvalues = r.eigenvalues;
  row.kernel_count = r.kernel.count;
  row.gap_ratio = r.kernel.gap_ratio;
  row.verdict = r.kernel.ambiguous() ? Verdict::inconclusive : Verdict::pass;
  return row;
}

std::string opt(const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("AMBIGUOUS"); }

}  // namespace

SpectralGrid spectral_grid(const polygeom::PolygonalDomain& domain, const std::vector<double>& hs,
                           const std::vector<double>& rhos, const StudyOptions& options) {
  check_decreasing(hs, "h");
  check_decreasing(rhos, "rho");
  SpectralGrid grid;
  grid.domain = domain.name;
  grid.euler_characteristic = polygeom::euler_characteristic(domain);
  grid.hs = hs;
  grid.rhos = rhos;
  for (double h : hs) {
    meshgen::TriangulateOptions mo;
    mo.h = h;
    mo.grading = options.grading;
    mo.structured = options.structured;
    const auto mesh = meshgen::build_mesh(domain, mo);
    GridLevel level;
    level.h = h;
    level.mesh_h = mesh.h;
    level.vertices = mesh.vertex_count();
    level.edges = mesh.edge_count();
    level.triangles = mesh.triangle_count();
    const auto maximal = dec::assemble(mesh, dec::BoundaryConditionSpec::maximal());
    for (int k = 0; k < 3; ++k) level.maximal[k] = spectral::analyze(maximal, k, options.solver, options.rule);
    for (double rho : rhos) {
      const auto minimal = dec::assemble(mesh, dec::BoundaryConditionSpec::minimal(rho));
      level.minimal.push_back(spectral::analyze(minimal, 1, options.solver, options.rule));
    }
    grid.levels.push_back(std::move(level));
  }
  return grid;
}

IndexStudy index_study(const SpectralGrid& grid, long expected) {
  IndexStudy st;
  st.domain = grid.domain;
  st.euler_characteristic = grid.euler_characteristic;
  st.expected = expected;
  bool ambiguous = false, wrong = false;
  for (const auto& level : grid.levels) {
    for (int k = 0; k < 3; ++k) st.rows.push_back(row_of(level.maximal[k], level.h));
    const auto k0 = count(level.maximal[0]);
    const auto k1max = count(level.maximal[1]);
    const auto k2 = count(level.maximal[2]);
    for (std::size_t r = 0; r < grid.rhos.size(); ++r) {
      const auto& rep = level.minimal[r];
      st.rows.push_back(row_of(rep, level.h));
      IndexPoint p;
      p.h = level.h;
      p.rho = grid.rhos[r];
      if (k0 && k2) p.even_kernel = *k0 + *k2;
      p.odd_kernel_min = count(rep);
      p.odd_kernel_max = k1max;
      if (p.even_kernel && p.odd_kernel_min) p.index = *p.even_kernel - *p.odd_kernel_min;
      if (p.even_kernel && p.odd_kernel_max) p.control_index = *p.even_kernel - *p.odd_kernel_max;
      if (!p.index) {
        p.verdict = Verdict::inconclusive;
        ambiguous = true;
      } else if (*p.index != expected ||
                 (grid.euler_characteristic != expected && *p.index == grid.euler_characteristic)) {
        p.verdict = Verdict::fail;
        wrong = true;
      }
      st.points.push_back(p);
    }
  }
  st.verdict = wrong ? Verdict::fail : ambiguous ? Verdict::inconclusive : Verdict::pass;
  st.notes.push_back("euler characteristic " + std::to_string(grid.euler_characteristic) + ", expected index " +
                     std::to_string(expected));
  return st;
}

GapStudy gap_study(const SpectralGrid& grid) {
  GapStudy st;
  st.domain = grid.domain;
  Verdict v = Verdict::pass;
  for (const auto& level : grid.levels) {
    st.rows.push_back(row_of(level.maximal[1], level.h));
    const double lmin = level.maximal[1].eigenvalues.empty() ? 0.0 : level.maximal[1].eigenvalues.front();
    st.maximal_lambda_min.push_back(lmin);
  }
  for (std::size_t r = 0; r < grid.rhos.size(); ++r) {
    GapSeries s;
    s.rho = grid.rhos[r];
    bool ambiguous = false;
    for (const auto& level : grid.levels) {
      const auto& rep = level.minimal[r];
      st.rows.push_back(row_of(rep, level.h));
      s.hs.push_back(level.h);
      s.lambda_min.push_back(rep.eigenvalues.front());
      ambiguous = ambiguous || rep.kernel.ambiguous();
    }
    const auto& finest = grid.levels.back().minimal[r];
    s.stabilized = s.lambda_min.back();
    s.certified_nonzero = !finest.kernel.ambiguous() && *finest.kernel.count == 0;
    if (s.lambda_min.size() >= 2) {
      const double prev = s.lambda_min[s.lambda_min.size() - 2];
      s.relative_change = std::abs(s.stabilized - prev) / std::abs(s.stabilized);
    } else {
      st.notes.push_back("single mesh level: stabilization not assessed");
      v = report::combine(v, Verdict::inconclusive);
    }
    if (ambiguous) v = report::combine(v, Verdict::inconclusive);
    if (s.relative_change >= st.max_relative_change) {
      st.notes.push_back("rho " + report::number(s.rho) + ": lambda_min changed by " +
                         report::number(s.relative_change) + " between the two finest meshes");
      v = report::combine(v, Verdict::fail);
    }
    if (!ambiguous && !s.certified_nonzero) {
      st.notes.push_back("rho " + report::number(s.rho) + ": minimal kernel is not trivial");
      v = report::combine(v, Verdict::fail);
    }
    st.series.push_back(std::move(s));
  }
  st.c = st.series.empty() ? 0.0 : st.series.front().stabilized;
  for (std::size_t i = 0; i < st.series.size(); ++i) {
    st.c = std::min(st.c, st.series[i].stabilized);
    if (i > 0 && st.series[i].stabilized < st.min_successive_ratio * st.series[i - 1].stabilized) {
      st.notes.push_back("stabilized lambda_min drops by more than half from rho " +
                         report::number(st.series[i - 1].rho) + " to " + report::number(st.series[i].rho));
      v = report::combine(v, Verdict::fail);
    }
  }
  if (!(st.c > 0.0)) v = report::combine(v, Verdict::fail);
  for (double l : st.maximal_lambda_min)
    if (l > 1e-10) {
      st.notes.push_back("maximal lambda_min " + report::number(l) + " exceeds 1e-10");
      v = report::combine(v, Verdict::fail);
    }
  st.notes.push_back("c = " + report::number(st.c));
  st.verdict = v;
  return st;
}

report::CsvTable rows_table(const RefinementStudy& study) {
  std::size_t m = 0;
  for (const auto& r : study.rows) m = std::max(m, r.eigenvalues.size());
  std::vector<std::string> header{"degree", "h", "rho", "bc"};
  for (std::size_t i = 1; i <= m; ++i) header.push_back("lambda_" + std::to_string(i));
  header.insert(header.end(), {"kernel_count", "gap_ratio", "verdict"});
  report::CsvTable t(header);
  for (const auto& r : study.rows) {
    std::vector<std::string> row{std::to_string(r.degree), report::number(r.h), report::number(r.rho), r.bc};
    for (std::size_t i = 0; i < m; ++i) row.push_back(i < r.eigenvalues.size() ? report::number(r.eigenvalues[i]) : "");
    row.push_back(r.kernel_count ? std::to_string(*r.kernel_count) : "AMBIGUOUS");
    row.push_back(report::number(r.gap_ratio));
    row.push_back(report::to_string(r.verdict));
    t.add_row(std::move(row));
  }
  return t;
}

report::CsvTable index_table(const IndexStudy& study) {
  report::CsvTable t({"h", "rho", "even_kernel", "odd_kernel_minimal", "odd_kernel_maximal", "index",
                      "control_index", "verdict"});
  for (const auto& p : study.points)
    t.add_row({report::number(p.h), report::number(p.rho), opt(p.even_kernel), opt(p.odd_kernel_min),
               opt(p.odd_kernel_max), opt(p.index), opt(p.control_index), report::to_string(p.verdict)});
  return t;
}

report::CsvTable gap_table(const GapStudy& study) {
  report::CsvTable t({"rho", "h", "lambda_min", "relative_change", "certified_nonzero"});
  for (const auto& s : study.series)
    for (std::size_t i = 0; i < s.hs.size(); ++i)
      t.add_row({report::number(s.rho), report::number(s.hs[i]), report::number(s.lambda_min[i]),
                 i + 1 == s.hs.size() ? report::number(s.relative_change) : "",
                 i + 1 == s.hs.size() ? (s.certified_nonzero ? "yes" : "no") : ""});
  return t;
}

std::string gap_plot(const GapStudy& study) {
  std::vector<report::Series> series;
  for (const auto& s : study.series) {
    report::Series line{"rho = " + report::number(s.rho), {}};
    for (std::size_t i = 0; i < s.hs.size(); ++i) line.points.emplace_back(s.hs[i], s.lambda_min[i]);
    series.push_back(std::move(line));
  }
  return report::svg_line_plot(series, {"lowest minimal 1-form eigenvalue on " + study.domain, "h", "lambda_min",
                                        true, false});
}

std::string index_plot(const IndexStudy& study) {
  std::vector<report::Series> series;
  std::vector<double> rhos;
  for (const auto& p : study.points)
    if (std::find(rhos.begin(), rhos.end(), p.rho) == rhos.end()) rhos.push_back(p.rho);
  for (double rho : rhos) {
    report::Series line{"rho = " + report::number(rho), {}};
    for (const auto& p : study.points)
      if (p.rho == rho && p.index) line.points.emplace_back(p.h, static_cast<double>(*p.index));
    series.push_back(std::move(line));
  }
  return report::svg_line_plot(series, {"index on " + study.domain, "h", "index", true, false});
}

}  // namespace cornerindex::studies
