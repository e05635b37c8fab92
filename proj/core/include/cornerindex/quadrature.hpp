#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace cornerindex::quadrature {

/// Gauss-Legendre nodes and weights on [-1, 1]; exact for polynomials of
/// degree 2n - 1.
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t exactness_degree() const { return 2 * nodes.size() - 1; }
};

/// Newton iteration on the Legendre recurrence; nodes sorted ascending.
Rule gauss_legendre(std::size_t n);

/// Composite Gauss-Legendre on [a, b] with `panels` equal panels.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Rule& rule, std::size_t panels = 1);

/// Tensor-product composite rule over the rectangle [x0,x1] x [y0,y1].
double integrate_rectangle(const std::function<double(double, double)>& f, double x0, double x1,
                           double y0, double y1, const Rule& rule, std::size_t panels = 1);

}  // namespace cornerindex::quadrature
