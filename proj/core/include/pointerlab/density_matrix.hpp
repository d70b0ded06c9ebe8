#pragma once

#include <Eigen/Core>
#include <complex>
#include <optional>
#include <vector>

#include "pointerlab/frame.hpp"
#include "pointerlab/grid.hpp"

namespace pointerlab {

enum class BasisTag { PositionGrid, AbstractIndex };

/// Hermitian density matrix on a position grid or an abstract index set.
///
/// Grid-based constructions absorb the quadrature weight: entries are
/// spacing * rho(x_i, x_j), so the plain matrix trace equals the physical
/// (integrated) trace and plain matrix eigenvectors are l2-normalized
/// discretized eigenfunctions. Normalized states have trace 1.
struct DensityMatrix {
  Eigen::MatrixXcd entries;
  BasisTag basis_tag = BasisTag::AbstractIndex;
  std::optional<Grid> grid;  // present iff basis_tag == PositionGrid

  int dim() const { return static_cast<int>(entries.rows()); }
  std::complex<double> trace() const { return entries.trace(); }

  /// Max entrywise deviation from the adjoint.
  double hermiticity_deviation() const;

  /// True when every entry's imaginary part is at most `tol` in magnitude.
  bool is_real(double tol = 1e-14) const;
};

/// rho = sum_i w_i |psi_i><psi_i| over the frame's states. Weights must be
/// non-negative (InvalidArgument otherwise) and sum to 1 within 1e-12.
DensityMatrix density_from_mixture(const PointerFrame& frame,
                                   const std::vector<double>& weights);

/// The constant density matrix on a grid: every entry 1/n, trace exactly 1,
/// rank one with the uniform vector as its only nontrivial eigenvector.
DensityMatrix constant_rho(const Grid& grid);

}  // namespace pointerlab
