#include "pointerlab/wavefunction.hpp"

#include <cmath>
#include <string>

#include "pointerlab/errors.hpp"

namespace pointerlab {

double WaveFunction::norm() const {
  return std::sqrt(grid.spacing * amplitudes.squaredNorm());
}

WaveFunction WaveFunction::normalized() const {
  const double n = norm();
  if (!(n > 0.0) || !std::isfinite(n))
    throw PreconditionViolation("WaveFunction::normalized: norm is zero or non-finite");
  WaveFunction out{grid, amplitudes / n};
  return out;
}

WaveFunction gaussian_state(const Grid& grid, const GaussianParams& params) {
  if (!(params.width_a > 0.0))
    throw InvalidArgument("gaussian_state: width_a must be positive, got " +
                          std::to_string(params.width_a));
  if (1.0 / params.width_a > grid.length / 10.0)
    throw PreconditionViolation(
        "gaussian_state: packet support 1/width_a = " +
        std::to_string(1.0 / params.width_a) + " exceeds length/10 = " +
        std::to_string(grid.length / 10.0));

  const double coeff = params.width_a * params.width_a;
  WaveFunction wf;
  wf.grid = grid;
  wf.amplitudes.resize(grid.n_points);
  for (int k = 0; k < grid.n_points; ++k) {
    const double delta = grid.wrap_displacement(grid.point(k) - params.center);
    wf.amplitudes[k] = detail::wrapped_gaussian_sum(coeff, delta, grid.length);
  }
  return wf.normalized();
}

std::complex<double> inner_product(const WaveFunction& f, const WaveFunction& g) {
  if (!f.grid.same_as(g.grid))
    throw InvalidArgument("inner_product: wavefunctions live on different grids");
  return f.grid.spacing * f.amplitudes.dot(g.amplitudes);
}

double analytic_overlap(double x, double y, double width_a, double length) {
  if (!(width_a > 0.0))
    throw InvalidArgument("analytic_overlap: width_a must be positive");
  const double d = periodic_distance(x, y, length);
  return std::exp(-width_a * width_a * d * d / 2.0);
}

Eigen::VectorXcd to_unit_vector(const WaveFunction& wf) {
  return wf.amplitudes * std::sqrt(wf.grid.spacing);
}

}  // namespace pointerlab
