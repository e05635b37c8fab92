#include "cornerindex/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "cornerindex/cornermap.hpp"
#include "cornerindex/domains.hpp"
#include "cornerindex/errors.hpp"
#include "cornerindex/oracles.hpp"

namespace cornerindex::acceptance {

namespace {

constexpr double kPi = std::numbers::pi;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

CriterionResult make(int id, std::string title, double budget) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.budget_seconds = budget;
  return r;
}

// Runs `body`, which fills verdict and detail; errors become FAIL.
CriterionResult timed(CriterionResult r, const std::function<void(CriterionResult&)>& body) {
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.verdict = Verdict::fail;
    r.detail = std::string("error: ") + e.what();
  }
  while (r.detail.size() >= 2 && r.detail.compare(r.detail.size() - 2, 2, "; ") == 0) r.detail.resize(r.detail.size() - 2);
  r.seconds = since(start);
  return r;
}

}  // namespace

CriterionResult euler_characteristics() {
  return timed(make(1, "Euler characteristics", 1.0), [](CriterionResult& r) {
    std::ostringstream d;
    bool ok = true;
    struct Case {
      polygeom::PolygonalDomain domain;
      int expected;
      std::vector<double> hs;
    };
    const std::vector<Case> cases{{domains::corner_annulus(), 0, {0.4, 0.2, 0.1}},
                                  {domains::pentagon_domain_notched(), -1, {0.15, 0.1}},
                                  {domains::triangle_domain_notched(), -1, {0.15, 0.1}}};
    for (const auto& c : cases) {
      const int chi = polygeom::euler_characteristic(c.domain);
      ok = ok && chi == c.expected;
      d << "chi(" << c.domain.name << ")=" << chi;
      for (double h : c.hs) {
        meshgen::TriangulateOptions o;
        o.h = h;
        const auto mesh = meshgen::build_mesh(c.domain, o);
        const long vef = mesh.euler_characteristic();
        ok = ok && vef == chi;
        d << (h == c.hs.front() ? " V-E+F=" : ",") << vef;
      }
      d << "; ";
    }
    r.verdict = ok ? Verdict::pass : Verdict::fail;
    r.detail = d.str();
  });
}

CriterionResult capacity_energy_grid() {
  return timed(make(2, "capacity energy closed form vs quadrature", 10.0), [](CriterionResult& r) {
    double worst = 0.0;
    for (double alpha : {0.05, 0.1, 0.5})
      for (double eps : {1e-4, 1e-2, 0.25})
        for (double beta : {kPi / 4, 3 * kPi / 4}) {
          const auto e = oracles::capacity_energy({alpha, eps, beta});
          worst = std::max(worst, std::abs(e.quadrature - e.closed_form) / std::abs(e.closed_form));
        }
    r.verdict = worst <= 1e-8 ? Verdict::pass : Verdict::fail;
    r.detail = "max relative error " + report::number(worst) + " over 18 parameter triples";
  });
}

CriterionResult defect_and_schedule() {
  return timed(make(3, "L2 defect bound and schedule", 10.0), [](CriterionResult& r) {
    bool ok = true;
    double tightest = 0.0;
    for (double alpha : {0.05, 0.1, 0.5})
      for (double eps : {1e-4, 1e-2, 0.25})
        for (double beta : {kPi / 4, 3 * kPi / 4}) {
          const auto d = oracles::l2_defect({alpha, eps, beta});
          ok = ok && d.quadrature <= d.bound;
          tightest = std::max(tightest, d.quadrature / d.bound);
        }
    std::ostringstream s;
    s << "max defect/bound " << report::number(tightest);
    for (double beta : {kPi / 4, 3 * kPi / 4}) {
      double prev = std::numeric_limits<double>::infinity();
      double last = 0.0;
      for (double alpha : {0.4, 0.2, 0.1, 0.05}) {
        last = oracles::capacity_schedule(alpha, beta).h1_defect_sq;
        ok = ok && last < prev;
        prev = last;
      }
      const double cap = 2.0 * beta * 0.05 * 1.5;
      ok = ok && last <= cap;
      s << "; beta=" << report::number(beta) << " final " << report::number(last) << " <= " << report::number(cap);
    }
    r.verdict = ok ? Verdict::pass : Verdict::fail;
    r.detail = s.str();
  });
}

CriterionResult bochner() {
  return timed(make(4, "integration by parts identity", 30.0), [](CriterionResult& r) {
    bool ok = true;
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto b = oracles::bochner_identity(oracles::random_compliant_form(seed));
      const double rel = std::abs(b.boundary_residual) / (1.0 + b.rhs);
      worst = std::max(worst, rel);
      ok = ok && rel <= 1e-8;
    }
    const auto violations = oracles::violating_forms();
    const auto v = oracles::bochner_identity(violations[0]);
    ok = ok && std::abs(v.lhs) <= 1e-6 && std::abs(v.rhs - 24.0) <= 1e-6;
    double smallest_violation = std::numeric_limits<double>::infinity();
    for (const auto& form : violations) {
      const auto b = oracles::bochner_identity(form);
      smallest_violation = std::min(smallest_violation, std::abs(b.boundary_residual) / (1.0 + b.rhs));
    }
    ok = ok && smallest_violation > 1e-3;
    r.verdict = ok ? Verdict::pass : Verdict::fail;
    r.detail = "compliant max |lhs-rhs|/(1+rhs) " + report::number(worst) + "; f=y,g=x lhs " +
               report::number(v.lhs) + " rhs " + report::number(v.rhs) + "; min violation residual " +
               report::number(smallest_violation);
  });
}

CriterionResult kernels(const studies::SpectralGrid& grid) {
  return timed(make(5, "kernel dimensions on " + grid.domain, 300.0), [&grid](CriterionResult& r) {
    bool ambiguous = false, ok = true;
    std::ostringstream d;
    auto check = [&](const spectral::SpectralReport& rep, std::size_t want) {
      if (rep.kernel.ambiguous()) {
        ambiguous = true;
        return std::string("?");
      }
      ok = ok && *rep.kernel.count == want;
      return std::to_string(*rep.kernel.count);
    };
    for (const auto& level : grid.levels) {
      d << "h=" << report::number(level.h) << " (F=" << level.triangles << "): deg0 " << check(level.maximal[0], 1)
        << ", deg1 " << check(level.maximal[1], 1) << ", deg2 " << check(level.maximal[2], 0) << ", deg1 min";
      for (const auto& m : level.minimal) d << ' ' << check(m, 0);
      d << "; ";
    }
    r.verdict = !ok ? Verdict::fail : ambiguous ? Verdict::inconclusive : Verdict::pass;
    r.detail = d.str();
  });
}

CriterionResult index(const studies::SpectralGrid& grid) {
  return timed(make(6, "index of the even/odd split", 300.0), [&grid](CriterionResult& r) {
    const auto st = studies::index_study(grid, 1);
    bool control_ok = true;
    std::ostringstream d;
    d << "index";
    for (const auto& p : st.points) {
      d << ' ' << (p.index ? std::to_string(*p.index) : "?");
      control_ok = control_ok && p.control_index && *p.control_index == grid.euler_characteristic;
    }
    d << "; both-maximal control";
    for (const auto& p : st.points) d << ' ' << (p.control_index ? std::to_string(*p.control_index) : "?");
    d << "; chi " << grid.euler_characteristic;
    r.verdict = report::combine(st.verdict, control_ok ? Verdict::pass : Verdict::fail);
    r.detail = d.str();
  });
}

CriterionResult spectral_gap(const studies::SpectralGrid& grid) {
  return timed(make(7, "minimal 1-form spectral gap trend", 300.0), [&grid](CriterionResult& r) {
    const auto st = studies::gap_study(grid);
    std::ostringstream d;
    for (const auto& s : st.series)
      d << "rho=" << report::number(s.rho) << " lambda_min " << report::number(s.stabilized) << " (change "
        << report::number(s.relative_change) << "); ";
    double worst_max = 0.0;
    for (double l : st.maximal_lambda_min) worst_max = std::max(worst_max, l);
    d << "c=" << report::number(st.c) << "; maximal lambda_min <= " << report::number(worst_max);
    r.verdict = st.verdict;
    r.detail = d.str();
  });
}

CriterionResult corner_turning() {
  return timed(make(8, "corner turning inequality", 1.0), [](CriterionResult& r) {
    bool ok = true;
    std::ostringstream d;
    for (double theta : {kPi / 2, kPi, 3 * kPi / 2}) {
      const auto t = polygeom::corner_turning_integrals(theta, 0.1, 10000);
      const double err = std::abs(t.signed_turning - (kPi - theta));
      ok = ok && err <= 1e-8 && t.inequality_holds == (theta <= kPi);
      d << "theta=" << report::number(theta) << " error " << report::number(err) << " inequality "
        << (t.inequality_holds ? "holds" : "fails") << "; ";
    }
    r.verdict = ok ? Verdict::pass : Verdict::fail;
    r.detail = d.str();
  });
}

CriterionResult corner_map() {
  return timed(make(9, "fold corner map P' -> Q'", 1.0), [](CriterionResult& r) {
    const auto pair = cornermap::build_counterexample_pair();
    const auto v = cornermap::validate(pair.map);
    const auto base = cornermap::lipschitz_after_scaling(pair.map, 1.0);
    const auto doubled = cornermap::lipschitz_after_scaling(pair.map, 2.0 * base.r0);
    const bool ok = v.valid() && v.continuity_residual <= 1e-12 && v.boundary_to_boundary && v.folds_present() &&
                    std::isfinite(base.r0) && std::abs(doubled.max_singular_value - 0.5) <= 1e-12;
    std::ostringstream d;
    d << pair.map.pieces.size() << " pieces, continuity " << report::number(v.continuity_residual)
      << ", boundary-to-boundary " << (v.boundary_to_boundary ? "yes" : "no") << ", fold pairs";
    for (auto n : v.fold_pairs_per_edge) d << ' ' << n;
    d << ", r0 " << report::number(base.r0) << ", sigma(2 r0) " << report::number(doubled.max_singular_value);
    if (!v.valid()) d << ", problem: " << v.problems.front();
    r.verdict = ok ? Verdict::pass : Verdict::fail;
    r.detail = d.str();
  });
}

AcceptanceReport run(const AcceptanceOptions& options, const std::vector<int>& only) {
  auto wanted = [&only](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };
  AcceptanceReport rep;
  auto add = [&](CriterionResult r) {
    if (options.enforce_budgets && r.seconds > r.budget_seconds && r.verdict == Verdict::pass) {
      r.verdict = Verdict::fail;
      r.detail += " (over the " + report::number(r.budget_seconds) + " s budget)";
    }
    rep.verdict = report::combine(rep.verdict, r.verdict);
    rep.results.push_back(std::move(r));
  };
  if (wanted(1)) add(euler_characteristics());
  if (wanted(2)) add(capacity_energy_grid());
  if (wanted(3)) add(defect_and_schedule());
  if (wanted(4)) add(bochner());
  if (wanted(5) || wanted(6) || wanted(7)) {
    const auto start = Clock::now();
    std::string failure;
    try {
      rep.grid = studies::spectral_grid(domains::corner_annulus(), options.spectral_hs, options.rhos, options.study);
    } catch (const std::exception& e) {
      failure = e.what();
    }
    const double grid_seconds = since(start);
    for (int id : {5, 6, 7}) {
      if (!wanted(id)) continue;
      CriterionResult r;
      if (rep.grid) {
        r = id == 5 ? kernels(*rep.grid) : id == 6 ? index(*rep.grid) : spectral_gap(*rep.grid);
        r.seconds += grid_seconds;
      } else {
        r = make(id, "spectral grid", 300.0);
        r.verdict = Verdict::fail;
        r.detail = "error: " + failure;
        r.seconds = grid_seconds;
      }
      add(std::move(r));
    }
  }
  if (wanted(8)) add(corner_turning());
  if (wanted(9)) add(corner_map());
  return rep;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s.precision(3);
  s << "criterion " << r.id << ' ' << report::to_string(r.verdict) << ' ' << std::fixed << r.seconds << "s "
    << r.title << ": " << r.detail;
  return s.str();
}

}  // namespace cornerindex::acceptance
