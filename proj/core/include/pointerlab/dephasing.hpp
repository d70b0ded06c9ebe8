#pragma once

#include <Eigen/Core>

#include "pointerlab/density_matrix.hpp"
#include "pointerlab/grid.hpp"

namespace pointerlab {

/// Entrywise Gaussian damping kernel K(x', x'') = theta(x'-x'') / theta(0),
/// where theta is the periodized Gaussian sum_m exp(-lambda (d + mL)^2).
///
/// The image sum keeps the kernel an exactly circulant matrix with positive
/// Fourier coefficients, hence PSD; dividing by theta(0) pins the diagonal to
/// exactly 1 so dephasing preserves diagonals and trace. lambda = 0 is the
/// identity kernel (all ones).
class DephasingKernel {
 public:
  /// Throws InvalidArgument for lambda < 0. The PSD invariant is verified at
  /// construction via the DFT of the kernel row.
  DephasingKernel(double strength_lambda, const Grid& grid);

  double strength_lambda() const { return strength_lambda_; }
  const Grid& grid() const { return grid_; }

  /// First row of the circulant kernel; entry d is K at displacement
  /// d * spacing. Symmetric: row[d] == row[n-d] bitwise.
  const Eigen::VectorXd& first_row() const { return first_row_; }

  /// Full kernel matrix K_ij = row[(j - i) mod n].
  Eigen::MatrixXd matrix() const;

 private:
  double strength_lambda_;
  Grid grid_;
  Eigen::VectorXd first_row_;
};

/// Schur (entrywise) product rho_r(x', x'') = K(x', x'') * rho(x', x'').
/// Preserves Hermiticity, the diagonal, the trace, and positive
/// semidefiniteness (Schur product with a PSD kernel). Throws InvalidArgument
/// when rho is not grid-based or lives on a different grid than the kernel.
DensityMatrix dephase(const DensityMatrix& rho, const DephasingKernel& kernel);

}  // namespace pointerlab
