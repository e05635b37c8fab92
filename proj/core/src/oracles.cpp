#include "cornerindex/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>

#include "cornerindex/errors.hpp"
#include "cornerindex/quadrature.hpp"

namespace cornerindex::oracles {

namespace {

constexpr double kPi = std::numbers::pi;

struct Doubled {
  double value;
  double magnitude;
};

// Composite Gauss-Legendre with panel doubling until the relative change,
// measured against the integral of |f|, drops below the tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSettings& q) {
  const auto rule = quadrature::gauss_legendre(q.points);
  auto pass = [&](std::size_t panels) {
    const double w = (b - a) / static_cast<double>(panels);
    Doubled d{0.0, 0.0};
    for (std::size_t p = 0; p < panels; ++p) {
      const double lo = a + w * static_cast<double>(p);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double v = f(lo + 0.5 * w * (1.0 + rule.nodes[i]));
        d.value += 0.5 * w * rule.weights[i] * v;
        d.magnitude += 0.5 * w * rule.weights[i] * std::abs(v);
      }
    }
    return d;
  };
  Doubled prev = pass(1);
  for (std::size_t k = 1, panels = 2; k <= q.max_doublings; ++k, panels *= 2) {
    const Doubled next = pass(panels);
    if (std::abs(next.value - prev.value) <= q.tolerance * next.magnitude) return next.value;
    prev = next;
  }
  throw OracleError("quadrature did not converge after panel doubling");
}

double sector_angle_integral(double beta, const QuadratureSettings& q) {
  return integrate_adaptive([](double) { return 1.0; }, -beta, beta, q);
}

// One-dimensional factor: quintic bump on [a, b] or a polynomial in (t - center).
struct Factor {
  enum Kind { bump, poly } kind = poly;
  double a = 0.0, b = 1.0, c = 0.0;    // bump
  double center = 0.0;                // poly
  std::array<double, 6> coeff{};      // poly
  int sign_gate = 0;                  // +1: zero for t < 0, -1: zero for t > 0

  double value(double t) const { return eval(t, false); }
  double derivative(double t) const { return eval(t, true); }

  double eval(double t, bool deriv) const {
    if ((sign_gate > 0 && t < 0.0) || (sign_gate < 0 && t > 0.0)) return 0.0;
    if (kind == bump) {
      if (t <= a || t >= b) return 0.0;
      const double l = b - a;
      const double s = (t - a) / l;
      // s^2 (1-s)^2 (1 + c s)
      const double q = s * s * (1.0 - s) * (1.0 - s);
      if (!deriv) return q * (1.0 + c * s);
      const double dq = 2.0 * s * (1.0 - s) * (1.0 - 2.0 * s);
      return (dq * (1.0 + c * s) + q * c) / l;
    }
    const double u = t - center;
    double v = 0.0;
    if (!deriv) {
      for (int k = 5; k >= 0; --k) v = v * u + coeff[static_cast<std::size_t>(k)];
    } else {
      for (int k = 5; k >= 1; --k) v = v * u + k * coeff[static_cast<std::size_t>(k)];
    }
    return v;
  }
};

struct Term {
  double amplitude;
  Factor x, y;
};

struct Sum {
  std::vector<Term> terms;
  double value(Point2 p) const {
    double s = 0.0;
    for (const auto& t : terms) s += t.amplitude * t.x.value(p.x) * t.y.value(p.y);
    return s;
  }
  double dx(Point2 p) const {
    double s = 0.0;
    for (const auto& t : terms) s += t.amplitude * t.x.derivative(p.x) * t.y.value(p.y);
    return s;
  }
  double dy(Point2 p) const {
    double s = 0.0;
    for (const auto& t : terms) s += t.amplitude * t.x.value(p.x) * t.y.derivative(p.y);
    return s;
  }
};

}  // namespace

void CapacityParams::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ValidationError("epsilon must lie in (0, 1)");
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
  if (!(beta > 0.0 && beta <= kPi)) throw ValidationError("beta must lie in (0, pi]");
}

double cutoff(const CapacityParams& p, double r) {
  if (r <= p.epsilon) return 0.0;
  return 1.0 - std::exp(p.alpha * (std::log(p.epsilon) - std::log(r)));
}

CapacityEnergy capacity_energy(const CapacityParams& p, const QuadratureSettings& q) {
  p.validate();
  const double le = std::log(p.epsilon);
  CapacityEnergy out;
  out.closed_form = p.beta * p.alpha * -std::expm1(2.0 * p.alpha * le);
  // |grad f|^2 r dr = alpha^2 eps^(2 alpha) r^(-2 alpha) ds with s = log r.
  const double radial = integrate_adaptive(
      [&](double s) { return p.alpha * p.alpha * std::exp(2.0 * p.alpha * (le - s)); }, le, 0.0, q);
  out.quadrature = sector_angle_integral(p.beta, q) * radial;
  return out;
}

L2Defect l2_defect(const CapacityParams& p, const QuadratureSettings& q) {
  p.validate();
  const double le = std::log(p.epsilon);
  const double half = 0.5 * le;
  // |1 - f|^2 r dr: r dr below eps, eps^(2 alpha) r^(2 - 2 alpha) ds above.
  auto outer = [&](double s) { return std::exp(2.0 * p.alpha * (le - s) + 2.0 * s); };
  const double radial = integrate_adaptive([](double r) { return r; }, 0.0, p.epsilon, q) +
                        integrate_adaptive(outer, le, half, q) + integrate_adaptive(outer, half, 0.0, q);
  L2Defect out;
  out.quadrature = sector_angle_integral(p.beta, q) * radial;
  out.bound = p.beta * p.epsilon + p.beta * std::exp(p.alpha * le);
  return out;
}

Schedule capacity_schedule(double alpha, double beta, const QuadratureSettings& q) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("schedule needs 0 < alpha < 1");
  Schedule s;
  s.alpha = alpha;
  s.epsilon = std::exp(std::log(alpha) / alpha);
  const CapacityParams p{alpha, s.epsilon, beta};
  s.energy = capacity_energy(p, q).quadrature;
  s.defect = l2_defect(p, q).quadrature;
  s.h1_defect_sq = s.energy + s.defect;
  return s;
}

double integrate_annulus(const std::function<double(Point2)>& h, const std::vector<double>& x_breaks,
                         const std::vector<double>& y_breaks, const QuadratureSettings& q) {
  auto grid = [](const std::vector<double>& extra) {
    std::vector<double> g{-2.0, -1.0, 1.0, 2.0};
    for (double b : extra)
      if (b > -2.0 && b < 2.0) g.push_back(b);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
  };
  const auto gx = grid(x_breaks);
  const auto gy = grid(y_breaks);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < gx.size(); ++i) {
    for (std::size_t j = 0; j + 1 < gy.size(); ++j) {
      const double cx = 0.5 * (gx[i] + gx[i + 1]);
      const double cy = 0.5 * (gy[j] + gy[j + 1]);
      if (std::abs(cx) < 1.0 && std::abs(cy) < 1.0) continue;
      total += integrate_adaptive(
          [&](double x) {
            return integrate_adaptive([&](double y) { return h({x, y}); }, gy[j], gy[j + 1], q);
          },
          gx[i], gx[i + 1], q);
    }
  }
  return total;
}

BochnerResult bochner_identity(const TestForm& form, const QuadratureSettings& q) {
  auto lhs = [&form](Point2 p) {
    const double curl = -form.fy(p) + form.gx(p);
    const double div = form.fx(p) + form.gy(p);
    return curl * curl + div * div;
  };
  auto rhs = [&form](Point2 p) {
    const double a = form.fx(p), b = form.fy(p), c = form.gx(p), d = form.gy(p);
    return a * a + b * b + c * c + d * d;
  };
  BochnerResult out;
  out.lhs = integrate_annulus(lhs, form.x_breaks, form.y_breaks, q);
  out.rhs = integrate_annulus(rhs, form.x_breaks, form.y_breaks, q);
  out.boundary_residual = out.lhs - out.rhs;
  return out;
}

TestForm random_compliant_form(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.0, 1.0);

  auto interval_bump = [&](double lo, double hi) {
    // Random sub-interval of (lo, hi) of length at least 0.3.
    const double len = 0.3 + (hi - lo - 0.3) * pos(rng);
    const double start = lo + (hi - lo - len) * pos(rng);
    Factor f;
    f.kind = Factor::bump;
    f.a = start;
    f.b = start + len;
    f.c = unit(rng);
    return f;
  };
  auto fixed_bump = [&](double lo, double hi) {
    Factor f;
    f.kind = Factor::bump;
    f.a = lo;
    f.b = hi;
    f.c = unit(rng);
    return f;
  };
  auto poly = [&](double center, int gate) {
    Factor f;
    f.kind = Factor::poly;
    f.center = center;
    for (auto& c : f.coeff) c = unit(rng);
    f.sign_gate = gate;
    return f;
  };

  auto f = std::make_shared<Sum>();
  auto g = std::make_shared<Sum>();
  TestForm form;
  form.label = "bumps seed " + std::to_string(seed);
  form.bc_compliant = true;
  for (int side : {1, -1}) {
    const double lo = side > 0 ? 1.0 : -2.0, hi = side > 0 ? 2.0 : -1.0;
    // Horizontal arm: g vanishes on y = +-1, +-2; f is free there.
    {
      Term tf{unit(rng), interval_bump(-0.9, 0.9), poly(1.5 * side, side)};
      Term tg{unit(rng), interval_bump(-0.9, 0.9), fixed_bump(lo, hi)};
      for (const auto* t : {&tf, &tg}) {
        form.x_breaks.insert(form.x_breaks.end(), {t->x.a, t->x.b});
      }
      f->terms.push_back(tf);
      g->terms.push_back(tg);
    }
    // Vertical arm: f vanishes on x = +-1, +-2; g is free there.
    {
      Term tf{unit(rng), fixed_bump(lo, hi), interval_bump(-0.9, 0.9)};
      Term tg{unit(rng), poly(1.5 * side, side), interval_bump(-0.9, 0.9)};
      for (const auto* t : {&tf, &tg}) {
        form.y_breaks.insert(form.y_breaks.end(), {t->y.a, t->y.b});
      }
      f->terms.push_back(tf);
      g->terms.push_back(tg);
    }
  }
  form.f = [f](Point2 p) { return f->value(p); };
  form.fx = [f](Point2 p) { return f->dx(p); };
  form.fy = [f](Point2 p) { return f->dy(p); };
  form.g = [g](Point2 p) { return g->value(p); };
  form.gx = [g](Point2 p) { return g->dx(p); };
  form.gy = [g](Point2 p) { return g->dy(p); };
  return form;
}

std::vector<TestForm> violating_forms() {
  std::vector<TestForm> out(3);
  out[0].label = "f = y, g = x";
  out[0].f = [](Point2 p) { return p.y; };
  out[0].fx = [](Point2) { return 0.0; };
  out[0].fy = [](Point2) { return 1.0; };
  out[0].g = [](Point2 p) { return p.x; };
  out[0].gx = [](Point2) { return 1.0; };
  out[0].gy = [](Point2) { return 0.0; };

  out[1].label = "f = y^3, g = x^3";
  out[1].f = [](Point2 p) { return p.y * p.y * p.y; };
  out[1].fx = [](Point2) { return 0.0; };
  out[1].fy = [](Point2 p) { return 3.0 * p.y * p.y; };
  out[1].g = [](Point2 p) { return p.x * p.x * p.x; };
  out[1].gx = [](Point2 p) { return 3.0 * p.x * p.x; };
  out[1].gy = [](Point2) { return 0.0; };

  out[2].label = "f = y(x+3), g = x";
  out[2].f = [](Point2 p) { return p.y * (p.x + 3.0); };
  out[2].fx = [](Point2 p) { return p.y; };
  out[2].fy = [](Point2 p) { return p.x + 3.0; };
  out[2].g = [](Point2 p) { return p.x; };
  out[2].gx = [](Point2) { return 1.0; };
  out[2].gy = [](Point2) { return 0.0; };
  return out;
}

TestForm zero_form() {
  TestForm t;
  t.label = "zero";
  t.bc_compliant = true;
  t.f = t.g = t.fx = t.fy = t.gx = t.gy = [](Point2) { return 0.0; };
  return t;
}

}  // namespace cornerindex::oracles
