#pragma once

#include <Eigen/Core>

namespace pointerlab {

/// Unitary forward DFT, F_p = (1/sqrt n) sum_k v_k exp(-2 pi i p k / n).
/// Direct O(n^2) evaluation; every consumer in this library is desk-scale.
Eigen::VectorXcd dft_unitary(const Eigen::VectorXcd& v);

/// Unit-norm plane wave e_p(k) = exp(+2 pi i p k / n) / sqrt n.
Eigen::VectorXcd plane_wave(int n, int p);

/// Eigenvalues of the symmetric circulant with the given first row:
/// c_p = sum_j row_j cos(2 pi p j / n), p = 0..n-1. The matching eigenvectors
/// are the plane waves e_p; the pair {p, n-p} shares c_p.
Eigen::VectorXd circulant_eigenvalues(const Eigen::VectorXd& first_row);

/// Max |entry(i,j) - row[(j-i) mod n]| against the matrix's own first row.
double circulant_deviation(const Eigen::MatrixXd& m);

}  // namespace pointerlab
