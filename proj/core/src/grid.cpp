#include "pointerlab/grid.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "pointerlab/errors.hpp"

namespace pointerlab {

double Grid::wrap_displacement(double delta) const {
  double w = delta - length * std::round(delta / length);
  if (w >= length / 2.0) w -= length;  // round-to-even can land on +L/2
  return w;
}

double Grid::periodic_distance(double x, double y) const {
  return pointerlab::periodic_distance(x, y, length);
}

Grid make_grid(int n_points, double length) {
  if (n_points < 2)
    throw InvalidArgument("make_grid: n_points must be >= 2, got " +
                          std::to_string(n_points));
  if (!(length > 0.0))
    throw InvalidArgument("make_grid: length must be positive, got " +
                          std::to_string(length));
  Grid g;
  g.n_points = n_points;
  g.length = length;
  g.spacing = length / n_points;
  g.points.resize(static_cast<std::size_t>(n_points));
  for (int k = 0; k < n_points; ++k) g.points[static_cast<std::size_t>(k)] = k * g.spacing;
  return g;
}

double periodic_distance(double x, double y, double length) {
  double r = std::fmod(std::abs(x - y), length);
  return std::min(r, length - r);
}

namespace detail {

double wrapped_gaussian_sum(double coeff, double delta, double length) {
  assert(coeff > 0.0);
  double total = std::exp(-coeff * delta * delta);
  for (int m = 1;; ++m) {
    const double lo = delta - m * length;
    const double hi = delta + m * length;
    const double shell = std::exp(-coeff * lo * lo) + std::exp(-coeff * hi * hi);
    total += shell;
    if (shell < 1e-16) break;
  }
  return total;
}

}  // namespace detail

}  // namespace pointerlab
