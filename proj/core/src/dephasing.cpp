#include "pointerlab/dephasing.hpp"

#include <cmath>
#include <string>

#include "pointerlab/dft.hpp"
#include "pointerlab/errors.hpp"

namespace pointerlab {

DephasingKernel::DephasingKernel(double strength_lambda, const Grid& grid)
    : strength_lambda_(strength_lambda), grid_(grid) {
  if (!(strength_lambda >= 0.0))
    throw InvalidArgument("DephasingKernel: strength_lambda must be >= 0, got " +
                          std::to_string(strength_lambda));
  const int n = grid_.n_points;
  first_row_.resize(n);
  if (strength_lambda_ == 0.0) {
    first_row_.setOnes();
    return;
  }
  const double theta0 =
      detail::wrapped_gaussian_sum(strength_lambda_, 0.0, grid_.length);
  for (int d = 0; d <= n / 2; ++d) {
    const double delta = grid_.wrap_displacement(d * grid_.spacing);
    const double value =
        detail::wrapped_gaussian_sum(strength_lambda_, delta, grid_.length) / theta0;
    first_row_[d] = value;
    if (d != 0 && d != n - d) first_row_[n - d] = value;
  }
  const Eigen::VectorXd fourier = circulant_eigenvalues(first_row_);
  if (fourier.minCoeff() < -1e-10 * fourier.maxCoeff())
    throw Error("DephasingKernel: kernel failed its PSD invariant");
}

Eigen::MatrixXd DephasingKernel::matrix() const {
  const int n = grid_.n_points;
  Eigen::MatrixXd k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) k(i, j) = first_row_[((j - i) % n + n) % n];
  return k;
}

DensityMatrix dephase(const DensityMatrix& rho, const DephasingKernel& kernel) {
  if (rho.basis_tag != BasisTag::PositionGrid || !rho.grid.has_value())
    throw InvalidArgument("dephase: density matrix is not grid-based");
  if (!rho.grid->same_as(kernel.grid()))
    throw InvalidArgument("dephase: density matrix and kernel grids differ");
  const int n = rho.dim();
  DensityMatrix out;
  out.basis_tag = rho.basis_tag;
  out.grid = rho.grid;
  out.entries.resize(n, n);
  const Eigen::VectorXd& row = kernel.first_row();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.entries(i, j) = rho.entries(i, j) * row[((j - i) % n + n) % n];
  return out;
}

}  // namespace pointerlab
