#pragma once

#include <Eigen/Core>
#include <complex>

#include "pointerlab/grid.hpp"

namespace pointerlab {

/// Complex amplitude vector sampled on a Grid. The physical norm is the
/// spacing-weighted one: norm^2 = spacing * sum_k |amplitudes_k|^2.
struct WaveFunction {
  Grid grid;
  Eigen::VectorXcd amplitudes;

  double norm() const;
  WaveFunction normalized() const;
};

/// Parameters of a Gaussian pointer packet exp(-width_a^2 (x' - center)^2).
/// width_a is the inverse-width parameter: larger a, narrower packet.
struct GaussianParams {
  double center = 0.0;
  double width_a = 1.0;
};

/// Builds the periodized (image-summed) Gaussian packet for `params`,
/// normalized to unit spacing-weighted norm. Centers outside [0, L) are
/// wrapped; construction is invariant under center -> center + L.
///
/// Throws InvalidArgument for width_a <= 0 and PreconditionViolation when the
/// packet support 1/width_a exceeds length/10 (the grid must dominate the
/// packet for any sampled statement about it to mean anything).
WaveFunction gaussian_state(const Grid& grid, const GaussianParams& params);

/// Spacing-weighted Hermitian inner product <f|g> = spacing * sum conj(f) g.
/// Throws InvalidArgument when the grids disagree.
std::complex<double> inner_product(const WaveFunction& f, const WaveFunction& g);

/// Closed-form overlap of two unit-norm Gaussian packets of common inverse
/// width `width_a` centered at x and y on a circle of circumference `length`:
/// exp(-width_a^2 d(x,y)^2 / 2) with d the periodic distance. Wrap-image
/// corrections (< 1e-12 in the supported parameter regime) are ignored.
double analytic_overlap(double x, double y, double width_a, double length);

/// The l2-unit sample vector u_k = amplitudes_k * sqrt(spacing); this is the
/// normalization under which IPR and the other localization metrics are
/// comparable with eigenvector output.
Eigen::VectorXcd to_unit_vector(const WaveFunction& wf);

}  // namespace pointerlab
