#include "pointerlab/density_matrix.hpp"

#include <cmath>
#include <string>

#include "pointerlab/errors.hpp"

namespace pointerlab {

double DensityMatrix::hermiticity_deviation() const {
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

bool DensityMatrix::is_real(double tol) const {
  return entries.imag().cwiseAbs().maxCoeff() <= tol;
}

DensityMatrix density_from_mixture(const PointerFrame& frame,
                                   const std::vector<double>& weights) {
  if (weights.size() != static_cast<std::size_t>(frame.size()))
    throw InvalidArgument("density_from_mixture: weights length " +
                          std::to_string(weights.size()) +
                          " does not match frame size " +
                          std::to_string(frame.size()));
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0.0)
      throw InvalidArgument("density_from_mixture: weight " + std::to_string(i) +
                            " is negative");
    total += weights[i];
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw InvalidArgument("density_from_mixture: weights sum to " +
                          std::to_string(total) + ", expected 1");

  const Grid& grid = frame.grid();
  const int n = grid.n_points;
  DensityMatrix rho;
  rho.basis_tag = BasisTag::PositionGrid;
  rho.grid = grid;
  rho.entries = Eigen::MatrixXcd::Zero(n, n);
  // Upper triangle accumulated, then mirrored: Hermitian by construction.
  for (std::size_t s = 0; s < weights.size(); ++s) {
    if (weights[s] == 0.0) continue;
    const Eigen::VectorXcd& psi = frame.states()[s].amplitudes;
    const double w = weights[s] * grid.spacing;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        rho.entries(i, j) += w * psi[i] * std::conj(psi[j]);
  }
  for (int i = 0; i < n; ++i) {
    rho.entries(i, i) = std::complex<double>(rho.entries(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) rho.entries(j, i) = std::conj(rho.entries(i, j));
  }
  return rho;
}

DensityMatrix constant_rho(const Grid& grid) {
  DensityMatrix rho;
  rho.basis_tag = BasisTag::PositionGrid;
  rho.grid = grid;
  rho.entries = Eigen::MatrixXcd::Constant(grid.n_points, grid.n_points,
                                           1.0 / grid.n_points);
  return rho;
}

}  // namespace pointerlab
