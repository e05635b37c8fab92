// cornerindex: batch verifications for the corner annulus, one per subcommand.
//
//   cornerindex <subcommand> [--domain A] [--h 0.2,0.1] [--rho 0.2,0.1] ...
//
// Every subcommand writes CSV (and an SVG derived from it) into --out, prints
// a one-line verdict and exits 0 PASS, 1 usage error, 2 FAIL, 3 INCONCLUSIVE.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cornerindex/acceptance.hpp"
#include "cornerindex/cornermap.hpp"
#include "cornerindex/domains.hpp"
#include "cornerindex/errors.hpp"
#include "cornerindex/oracles.hpp"
#include "cornerindex/studies.hpp"

namespace ci = cornerindex;
using ci::report::CsvTable;
using ci::report::number;
using ci::report::Verdict;

namespace {

constexpr double kPi = std::numbers::pi;

struct RunConfig {
  std::string domain = "A";
  std::vector<double> hs;
  std::vector<double> rhos;
  double grading = 2.0;
  bool structured = false;
  std::vector<double> alphas;
  std::vector<double> epsilons;
  std::vector<double> betas;
  std::vector<double> schedule_alphas{0.4, 0.2, 0.1, 0.05};
  std::vector<double> thetas;
  double radius = 0.1;
  std::size_t quad_points = 0;  // 0: subcommand default
  std::size_t m = 6;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::size_t forms = 10;
  long expected = 1;
  std::vector<int> criteria;
  bool no_budgets = false;
  std::string out = "cornerindex-out";
};

struct Outcome {
  Verdict verdict = Verdict::pass;
  std::string summary;
};

template <class T>
std::vector<T> or_default(const std::vector<T>& v, std::vector<T> fallback) {
  return v.empty() ? fallback : v;
}

class Writer {
 public:
  explicit Writer(const RunConfig& c) : dir_(ci::report::output_directory(c.out)) {}
  void csv(const std::string& name, const CsvTable& t) const { ci::report::write_atomic(dir_ / name, t.str()); }
  void text(const std::string& name, const std::string& s) const { ci::report::write_atomic(dir_ / name, s); }

 private:
  std::filesystem::path dir_;
};

ci::studies::StudyOptions study_options(const RunConfig& c) {
  ci::studies::StudyOptions o;
  o.solver.m = c.m;
  o.solver.tol = c.tol;
  o.solver.seed = c.seed;
  o.grading = c.grading;
  o.structured = c.structured;
  return o;
}

ci::meshgen::TriangulateOptions mesh_options(const RunConfig& c, double h) {
  ci::meshgen::TriangulateOptions o;
  o.h = h;
  o.grading = c.grading;
  o.structured = c.structured;
  return o;
}

std::string domain_svg(const ci::polygeom::PolygonalDomain& d, const std::string& title) {
  std::vector<ci::report::Series> loops;
  for (std::size_t l = 0; l < d.loop_count(); ++l) {
    ci::report::Series s{l == 0 ? "outer" : "hole " + std::to_string(l), {}};
    for (const auto& p : d.loop(l)) s.points.emplace_back(p.x, p.y);
    if (!d.loop(l).empty()) s.points.emplace_back(d.loop(l).front().x, d.loop(l).front().y);
    loops.push_back(std::move(s));
  }
  return ci::report::svg_line_plot(loops, {title, "x", "y", false, false});
}

std::string mesh_svg(const ci::meshgen::SimplicialMesh& mesh) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& p : mesh.vertices) {
    x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
  }
  const double size = 600, pad = 10, scale = (size - 2 * pad) / std::max(x1 - x0, y1 - y0);
  std::ostringstream s;
  s.precision(6);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g fill=\"none\" stroke=\"#1f77b4\" "
       "stroke-width=\"0.4\">\n";
  for (const auto& e : mesh.edges) {
    const auto& a = mesh.vertices[e[0]];
    const auto& b = mesh.vertices[e[1]];
    s << "<line x1=\"" << pad + (a.x - x0) * scale << "\" y1=\"" << size - pad - (a.y - y0) * scale << "\" x2=\""
      << pad + (b.x - x0) * scale << "\" y2=\"" << size - pad - (b.y - y0) * scale << "\"/>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

// ---------------------------------------------------------------------------

Outcome run_chi(const RunConfig& c, const Writer& w) {
  const auto domain = ci::domains::by_name(c.domain);
  const int chi = ci::polygeom::euler_characteristic(domain);
  std::cout << chi << '\n';
  CsvTable t({"domain", "h", "vertices", "edges", "triangles", "v_minus_e_plus_f", "euler_characteristic"});
  ci::report::Series s{"V - E + F", {}};
  bool ok = true;
  double shortest = std::numeric_limits<double>::infinity();
  for (const auto& e : ci::polygeom::domain_edges(domain)) shortest = std::min(shortest, ci::distance(e.a, e.b));
  std::vector<double> hs;
  for (double h : {0.4, 0.2, 0.1, 0.05})
    if (h < shortest) hs.push_back(h);
  for (double h : or_default(c.hs, hs)) {
    const auto mesh = ci::meshgen::build_mesh(domain, mesh_options(c, h));
    const long vef = mesh.euler_characteristic();
    ok = ok && vef == chi;
    t.add_row({domain.name, number(h), std::to_string(mesh.vertex_count()), std::to_string(mesh.edge_count()),
               std::to_string(mesh.triangle_count()), std::to_string(vef), std::to_string(chi)});
    s.points.emplace_back(h, static_cast<double>(vef));
  }
  w.csv("chi.csv", t);
  w.text("chi.svg", ci::report::svg_line_plot({s}, {"V - E + F on " + domain.name, "h", "V - E + F", true, false}));
  return {ok ? Verdict::pass : Verdict::fail, "chi(" + domain.name + ") = " + std::to_string(chi) +
                                                  (ok ? ", V - E + F agrees on every mesh" : ", mesh mismatch")};
}

Outcome run_angles(const RunConfig& c, const Writer& w) {
  const auto domain = ci::domains::by_name(c.domain);
  CsvTable t({"loop", "index", "x", "y", "interior_angle", "angle_over_pi", "reentrant"});
  std::size_t reentrant = 0;
  for (const auto& v : ci::polygeom::interior_angles(domain)) {
    const bool re = v.interior_angle > kPi;
    reentrant += re;
    t.add_row({std::to_string(v.loop), std::to_string(v.index), number(v.position.x), number(v.position.y),
               number(v.interior_angle), number(v.interior_angle / kPi), re ? "yes" : "no"});
  }
  double total = 0.0;
  for (std::size_t l = 0; l < domain.loop_count(); ++l) total += ci::polygeom::loop_turning(domain, l);
  const int chi = ci::polygeom::euler_characteristic(domain);
  const bool ok = std::abs(total - 2 * kPi * chi) <= 1e-9;
  w.csv("angles.csv", t);
  w.text("angles.svg", domain_svg(domain, "corners of " + domain.name));
  return {ok ? Verdict::pass : Verdict::fail, std::to_string(t.row_count()) + " corners, " +
                                                  std::to_string(reentrant) + " reentrant, total turning " +
                                                  number(total) + " = 2 pi chi " + (ok ? "holds" : "fails")};
}

Outcome run_turning(const RunConfig& c, const Writer& w) {
  CsvTable t({"theta", "radius", "signed_turning", "absolute_turning", "pi_minus_theta", "error", "inequality"});
  ci::report::Series s{"signed turning", {}}, a{"-absolute turning", {}};
  Verdict v = Verdict::pass;
  for (double theta : or_default(c.thetas, {kPi / 2, kPi, 3 * kPi / 2})) {
    const auto r = ci::polygeom::corner_turning_integrals(theta, c.radius, c.quad_points ? c.quad_points : 10000);
    const double err = std::abs(r.signed_turning - (kPi - theta));
    if (err > 1e-8 || !r.inequality_holds) v = Verdict::fail;
    std::cout << "theta " << number(theta) << ": -int|k| >= -(pi - theta) "
              << (r.inequality_holds ? "PASS" : "FAIL") << " (signed " << number(r.signed_turning) << ", absolute "
              << number(r.absolute_turning) << ")\n";
    t.add_row({number(theta), number(c.radius), number(r.signed_turning), number(r.absolute_turning),
               number(kPi - theta), number(err), r.inequality_holds ? "PASS" : "FAIL"});
    s.points.emplace_back(theta, r.signed_turning);
    a.points.emplace_back(theta, -r.absolute_turning);
  }
  w.csv("turning.csv", t);
  w.text("turning.svg", ci::report::svg_line_plot({s, a}, {"corner turning", "theta", "turning", false, false}));
  return {v, v == Verdict::pass ? "inequality holds for every theta" : "inequality fails for some theta > pi"};
}

Outcome run_capacity(const RunConfig& c, const Writer& w) {
  ci::oracles::QuadratureSettings q;
  if (c.quad_points) q.points = c.quad_points;
  CsvTable t({"alpha", "epsilon", "beta", "closed_form", "quadrature", "bound", "defect"});
  double worst = 0.0;
  bool bound_ok = true;
  const auto betas = or_default(c.betas, {kPi / 4, 3 * kPi / 4});
  for (double alpha : or_default(c.alphas, {0.05, 0.1, 0.5}))
    for (double eps : or_default(c.epsilons, {1e-4, 1e-2, 0.25}))
      for (double beta : betas) {
        const ci::oracles::CapacityParams p{alpha, eps, beta};
        const auto e = ci::oracles::capacity_energy(p, q);
        const auto d = ci::oracles::l2_defect(p, q);
        worst = std::max(worst, std::abs(e.quadrature - e.closed_form) / std::abs(e.closed_form));
        bound_ok = bound_ok && d.quadrature <= d.bound;
        t.add_row({number(alpha), number(eps), number(beta), number(e.closed_form), number(e.quadrature),
                   number(d.bound), number(d.quadrature)});
      }
  CsvTable st({"alpha", "epsilon", "beta", "energy", "defect", "h1_defect_sq"});
  std::vector<ci::report::Series> lines;
  bool schedule_ok = true;
  for (double beta : betas) {
    ci::report::Series s{"beta = " + number(beta), {}};
    double prev = std::numeric_limits<double>::infinity();
    for (double alpha : c.schedule_alphas) {
      const auto sc = ci::oracles::capacity_schedule(alpha, beta, q);
      schedule_ok = schedule_ok && sc.h1_defect_sq < prev;
      prev = sc.h1_defect_sq;
      st.add_row({number(alpha), number(sc.epsilon), number(beta), number(sc.energy), number(sc.defect),
                  number(sc.h1_defect_sq)});
      s.points.emplace_back(alpha, sc.h1_defect_sq);
    }
    lines.push_back(std::move(s));
  }
  w.csv("capacity.csv", t);
  w.csv("schedule.csv", st);
  w.text("schedule.svg",
         ci::report::svg_line_plot(lines, {"H1 defect along eps = alpha^(1/alpha)", "alpha", "defect", true, true}));
  const bool ok = worst <= 1e-8 && bound_ok && schedule_ok;
  return {ok ? Verdict::pass : Verdict::fail,
          "max relative energy error " + number(worst) + ", L2 bound " + (bound_ok ? "holds" : "violated") +
              ", schedule " + (schedule_ok ? "strictly decreasing" : "not decreasing")};
}

Outcome run_bochner(const RunConfig& c, const Writer& w) {
  CsvTable t({"label", "bc_compliant", "lhs", "rhs", "residual"});
  ci::report::Series s{"|lhs - rhs| / (1 + rhs)", {}};
  double worst = 0.0;
  std::size_t k = 0;
  auto record = [&](const ci::oracles::TestForm& f) {
    const auto b = ci::oracles::bochner_identity(f);
    t.add_row({f.label, f.bc_compliant ? "yes" : "no", number(b.lhs), number(b.rhs), number(b.boundary_residual)});
    s.points.emplace_back(static_cast<double>(k++), std::abs(b.boundary_residual) / (1.0 + b.rhs));
    return b;
  };
  for (std::size_t i = 0; i < c.forms; ++i) {
    const auto b = record(ci::oracles::random_compliant_form(c.seed + i));
    worst = std::max(worst, std::abs(b.boundary_residual) / (1.0 + b.rhs));
  }
  bool violations_ok = true;
  for (const auto& f : ci::oracles::violating_forms()) {
    const auto b = record(f);
    violations_ok = violations_ok && std::abs(b.boundary_residual) / (1.0 + b.rhs) > 1e-3;
  }
  w.csv("bochner.csv", t);
  w.text("bochner.svg", ci::report::svg_line_plot({s}, {"integration by parts residual", "form", "relative residual",
                                                        false, true}));
  const bool ok = worst <= 1e-8 && violations_ok;
  return {ok ? Verdict::pass : Verdict::fail, "compliant forms max relative residual " + number(worst) +
                                                  ", violating forms " +
                                                  (violations_ok ? "detected" : "not detected")};
}

ci::studies::SpectralGrid grid_for(const RunConfig& c) {
  return ci::studies::spectral_grid(ci::domains::by_name(c.domain), or_default(c.hs, {0.2, 0.1}),
                                    or_default(c.rhos, {0.2, 0.1, 0.05}), study_options(c));
}

Outcome run_spectrum(const RunConfig& c, const Writer& w) {
  const auto domain = ci::domains::by_name(c.domain);
  const auto grid = grid_for(c);
  ci::studies::RefinementStudy st;
  st.domain = grid.domain;
  // Absolute harmonic forms of a planar domain: b0 = 1, b1 = #holes, b2 = 0.
  const std::size_t betti[3] = {1, domain.holes.size(), 0};
  Verdict v = Verdict::pass;
  std::vector<ci::report::Series> lines;
  for (int k = 0; k < 3; ++k) lines.push_back({"degree " + std::to_string(k) + " maximal", {}});
  for (const auto& level : grid.levels) {
    for (int k = 0; k < 3; ++k) {
      const auto& r = level.maximal[k];
      ci::studies::StudyRow row;
      row.degree = k;
      row.h = level.h;
      row.bc = r.bc;
      row.eigenvalues = r.eigenvalues;
      row.kernel_count = r.kernel.count;
      row.gap_ratio = r.kernel.gap_ratio;
      if (r.kernel.ambiguous()) {
        row.verdict = Verdict::inconclusive;
      } else if (*r.kernel.count != betti[k]) {
        row.verdict = Verdict::fail;
      }
      v = ci::report::combine(v, row.verdict);
      st.rows.push_back(row);
      if (r.kernel.count) lines[k].points.emplace_back(level.h, static_cast<double>(*r.kernel.count));
    }
    for (const auto& r : level.minimal) {
      ci::studies::StudyRow row;
      row.degree = 1;
      row.h = level.h;
      row.rho = r.rho;
      row.bc = r.bc;
      row.eigenvalues = r.eigenvalues;
      row.kernel_count = r.kernel.count;
      row.gap_ratio = r.kernel.gap_ratio;
      row.verdict = r.kernel.ambiguous() ? Verdict::inconclusive : Verdict::pass;
      v = ci::report::combine(v, row.verdict);
      st.rows.push_back(row);
    }
  }
  w.csv("spectrum.csv", ci::studies::rows_table(st));
  w.text("spectrum.svg", ci::report::svg_line_plot(lines, {"kernel dimension on " + grid.domain, "h",
                                                           "dim ker", true, false}));
  std::ostringstream s;
  const auto& fine = grid.levels.back();
  s << "finest h=" << number(fine.h) << ": kernels";
  for (int k = 0; k < 3; ++k)
    s << ' ' << (fine.maximal[k].kernel.count ? std::to_string(*fine.maximal[k].kernel.count) : "?");
  s << " (expected " << betti[0] << ' ' << betti[1] << ' ' << betti[2] << "), minimal degree 1";
  for (const auto& r : fine.minimal) s << ' ' << (r.kernel.count ? std::to_string(*r.kernel.count) : "?");
  return {v, s.str()};
}

Outcome run_index(const RunConfig& c, const Writer& w) {
  const auto grid = grid_for(c);
  const auto st = ci::studies::index_study(grid, c.expected);
  w.csv("index.csv", ci::studies::index_table(st));
  w.csv("index_spectrum.csv", ci::studies::rows_table(st));
  w.text("index.svg", ci::studies::index_plot(st));
  std::ostringstream s;
  s << "index on " << grid.domain << ":";
  for (const auto& p : st.points) s << ' ' << (p.index ? std::to_string(*p.index) : "?");
  s << " (chi " << grid.euler_characteristic << ", expected " << c.expected << ")";
  return {st.verdict, s.str()};
}

Outcome run_gap(const RunConfig& c, const Writer& w) {
  const auto st = ci::studies::gap_study(grid_for(c));
  w.csv("gap.csv", ci::studies::gap_table(st));
  w.csv("gap_spectrum.csv", ci::studies::rows_table(st));
  w.text("gap.svg", ci::studies::gap_plot(st));
  std::string s;
  for (const auto& n : st.notes) s += (s.empty() ? "" : "; ") + n;
  return {st.verdict, s};
}

Outcome run_cornermap(const RunConfig&, const Writer& w) {
  const auto pair = ci::cornermap::build_counterexample_pair();
  const auto v = ci::cornermap::validate(pair.map);
  const auto base = ci::cornermap::lipschitz_after_scaling(pair.map, 1.0);
  CsvTable t({"r_over_r0", "r", "max_singular_value"});
  ci::report::Series s{"max singular value", {}};
  for (double f : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double r = f * base.r0;
    const double sigma = ci::cornermap::lipschitz_after_scaling(pair.map, r).max_singular_value;
    t.add_row({number(f), number(r), number(sigma)});
    s.points.emplace_back(r, sigma);
  }
  CsvTable vt({"pieces", "orientation_reversing", "area_defect", "continuity_residual", "conforming",
               "boundary_to_boundary", "assignments_hold", "image_in_target", "folds_present", "r0"});
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  vt.add_row({std::to_string(pair.map.pieces.size()), std::to_string(v.orientation_reversing), number(v.area_defect),
              number(v.continuity_residual), yn(v.conforming), yn(v.boundary_to_boundary), yn(v.assignments_hold),
              yn(v.image_in_target), yn(v.folds_present()), number(base.r0)});
  std::ostringstream map_text;
  ci::cornermap::write_map(map_text, pair.map);
  w.csv("cornermap.csv", vt);
  w.csv("lipschitz.csv", t);
  w.text("cornermap.txt", map_text.str());
  w.text("lipschitz.svg", ci::report::svg_line_plot({s}, {"Lipschitz constant of the scaled map", "r",
                                                          "max singular value", true, true}));
  const bool ok = v.valid() && v.boundary_to_boundary && v.folds_present() && std::isfinite(base.r0);
  std::string summary = std::to_string(pair.map.pieces.size()) + " pieces, continuity " +
                        number(v.continuity_residual) + ", r0 " + number(base.r0);
  if (!v.valid()) summary += ", " + v.problems.front();
  return {ok ? Verdict::pass : Verdict::fail, summary};
}

Outcome run_mesh(const RunConfig& c, const Writer& w) {
  const auto domain = ci::domains::by_name(c.domain);
  const double h = or_default(c.hs, {0.1}).front();
  const auto mesh = ci::meshgen::build_mesh(domain, mesh_options(c, h));
  std::ostringstream off, tags;
  ci::meshgen::write_off(off, mesh);
  std::vector<ci::meshgen::VertexDisk> disks;
  if (!c.rhos.empty()) disks = ci::meshgen::vertex_disks(mesh, domain, c.rhos.front());
  ci::meshgen::write_tags(tags, mesh, disks);
  CsvTable t({"domain", "h", "longest_edge", "min_angle", "vertices", "edges", "triangles", "v_minus_e_plus_f"});
  t.add_row({domain.name, number(h), number(mesh.h), number(mesh.min_angle()), std::to_string(mesh.vertex_count()),
             std::to_string(mesh.edge_count()), std::to_string(mesh.triangle_count()),
             std::to_string(mesh.euler_characteristic())});
  w.text("mesh.off", off.str());
  w.text("mesh.tags", tags.str());
  w.csv("mesh.csv", t);
  w.text("mesh.svg", mesh_svg(mesh));
  const bool ok = mesh.is_tagged() && mesh.euler_characteristic() == ci::polygeom::euler_characteristic(domain);
  return {ok ? Verdict::pass : Verdict::fail,
          std::to_string(mesh.triangle_count()) + " triangles, longest edge " + number(mesh.h)};
}

Outcome run_all(const RunConfig& c, const Writer& w) {
  ci::acceptance::AcceptanceOptions o;
  if (!c.hs.empty()) o.spectral_hs = c.hs;
  if (!c.rhos.empty()) o.rhos = c.rhos;
  o.study = study_options(c);
  o.enforce_budgets = !c.no_budgets;
  const auto rep = ci::acceptance::run(o, c.criteria);
  CsvTable t({"criterion", "title", "verdict", "detail"});
  for (const auto& r : rep.results) {
    std::cout << ci::acceptance::format_line(r) << '\n';
    t.add_row({std::to_string(r.id), r.title, ci::report::to_string(r.verdict), r.detail});
  }
  w.csv("acceptance.csv", t);
  if (rep.grid) {
    const auto index = ci::studies::index_study(*rep.grid);
    const auto gap = ci::studies::gap_study(*rep.grid);
    w.csv("index.csv", ci::studies::index_table(index));
    w.csv("spectrum.csv", ci::studies::rows_table(index));
    w.csv("gap.csv", ci::studies::gap_table(gap));
    w.text("index.svg", ci::studies::index_plot(index));
    w.text("gap.svg", ci::studies::gap_plot(gap));
  }
  std::size_t passed = 0;
  for (const auto& r : rep.results) passed += r.verdict == Verdict::pass;
  return {rep.verdict, std::to_string(passed) + "/" + std::to_string(rep.results.size()) + " criteria pass"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verifications for the corner annulus [-2,2]^2 minus (-1,1)^2"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file; command-line flags take precedence");
  RunConfig c;
  app.add_option("--domain", c.domain, "A, square, P, Q, P', Q' or a domain file");
  app.add_option("--h", c.hs, "mesh sizes, strictly decreasing")->delimiter(',')->check(CLI::PositiveNumber);
  app.add_option("--rho", c.rhos, "vertex disk radii, strictly decreasing")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  app.add_option("--grading", c.grading, "mesh grading exponent")->check(CLI::Range(1.0, 100.0));
  app.add_flag("--structured", c.structured, "criss-cross grid instead of graded Delaunay");
  app.add_option("--alpha-series", c.alphas, "capacity exponents")->delimiter(',')->check(CLI::PositiveNumber);
  app.add_option("--epsilon", c.epsilons, "capacity cut-off radii")->delimiter(',')->check(CLI::Range(0.0, 1.0));
  app.add_option("--beta", c.betas, "sector half-angles")->delimiter(',')->check(CLI::PositiveNumber);
  app.add_option("--schedule", c.schedule_alphas, "alphas of the eps = alpha^(1/alpha) schedule")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--theta", c.thetas, "corner angles for turning")->delimiter(',')->check(CLI::PositiveNumber);
  app.add_option("--radius", c.radius, "corner rounding radius")->check(CLI::PositiveNumber);
  app.add_option("--quad-points", c.quad_points, "quadrature points")->check(CLI::PositiveNumber);
  app.add_option("--m", c.m, "eigenpairs per solve")->check(CLI::PositiveNumber);
  app.add_option("--tol", c.tol, "eigensolver residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "random seed");
  app.add_option("--forms", c.forms, "random compliant forms for bochner")->check(CLI::PositiveNumber);
  app.add_option("--expected", c.expected, "expected index");
  app.add_option("--criteria", c.criteria, "acceptance criteria to run (all)")
      ->delimiter(',')
      ->check(CLI::Range(1, 9));
  app.add_flag("--no-budgets", c.no_budgets, "do not fail criteria that exceed their runtime budget");
  app.add_option("--out", c.out, "output directory (overridden by " + std::string(ci::report::kOutputDirEnv) + ")");

  using Runner = Outcome (*)(const RunConfig&, const Writer&);
  const std::vector<std::tuple<std::string, std::string, Runner>> commands{
      {"chi", "Euler characteristic of the domain and of its meshes", run_chi},
      {"angles", "interior angles and total boundary turning", run_angles},
      {"turning", "curvature integrals of rounded corners", run_turning},
      {"capacity", "cut-off energy, L2 defect and schedule", run_capacity},
      {"bochner", "integration by parts identity for 1-forms on A", run_bochner},
      {"spectrum", "Hodge Laplacian kernel dimensions by degree and treatment", run_spectrum},
      {"index", "index of the even/odd split over the (h, rho) grid", run_index},
      {"gap", "lowest minimal 1-form eigenvalue over the (h, rho) grid", run_gap},
      {"cornermap", "fold corner map between the notched pentagon and triangle", run_cornermap},
      {"mesh", "write a mesh with boundary tags", run_mesh},
      {"all", "the nine acceptance criteria", run_all},
  };
  for (const auto& [name, help, fn] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  for (const auto& [name, help, fn] : commands) {
    if (!app.got_subcommand(name)) continue;
    try {
      const Outcome o = fn(c, Writer(c));
      std::cout << name << ' ' << ci::report::to_string(o.verdict) << ": " << o.summary << std::endl;
      return ci::report::exit_code(o.verdict);
    } catch (const ci::ValidationError& e) {
      std::cerr << name << ": invalid configuration: " << e.what() << '\n';
      return 1;
    } catch (const std::exception& e) {
      std::cerr << name << ": error: " << e.what() << '\n';
      return 2;
    }
  }
  return 1;
}
