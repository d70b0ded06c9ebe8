#pragma once

#include <vector>

namespace pointerlab {

/// Uniform periodic 1-D position lattice: x_k = k * spacing, k = 0..n_points-1,
/// with period `length`. The discretization substrate for every continuum
/// object in the library.
struct Grid {
  int n_points = 0;
  double length = 0.0;
  double spacing = 0.0;
  std::vector<double> points;

  double point(int k) const { return points[static_cast<std::size_t>(k)]; }

  /// Signed displacement wrapped into [-length/2, length/2).
  double wrap_displacement(double delta) const;

  /// Periodic distance, in [0, length/2].
  double periodic_distance(double x, double y) const;

  bool same_as(const Grid& other) const {
    return n_points == other.n_points && length == other.length;
  }
};

/// Builds a Grid. Throws InvalidArgument unless n_points >= 2 and length > 0.
Grid make_grid(int n_points, double length);

/// Periodic distance on a circle of circumference `length`, without a Grid.
double periodic_distance(double x, double y, double length);

namespace detail {

/// Image sum  sum_m exp(-coeff * (delta + m*length)^2)  truncated once a
/// shell's contribution drops below 1e-16. `delta` must be the minimum-image
/// displacement and coeff must be positive (the coeff == 0 sum diverges and
/// is handled by callers).
double wrapped_gaussian_sum(double coeff, double delta, double length);

}  // namespace detail

}  // namespace pointerlab
