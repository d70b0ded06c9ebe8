#pragma once

#include <Eigen/Core>
#include <vector>

#include "pointerlab/grid.hpp"
#include "pointerlab/wavefunction.hpp"

namespace pointerlab {

/// A finite sample of the continuum of displaced Gaussian packets: an ordered
/// family of unit-norm states sharing one inverse width. Members are pairwise
/// non-orthogonal (Gaussians overlap everywhere); construction rejects
/// families so spread out that the overlap underflows to an exact 0.
class PointerFrame {
 public:
  /// Throws InvalidArgument for an empty member list, mismatched widths, or a
  /// pair whose overlap is not strictly positive in double precision.
  PointerFrame(const Grid& grid, std::vector<GaussianParams> members);

  const Grid& grid() const { return grid_; }
  const std::vector<GaussianParams>& members() const { return members_; }
  const std::vector<WaveFunction>& states() const { return states_; }
  int size() const { return static_cast<int>(members_.size()); }
  double width_a() const { return members_.front().width_a; }

 private:
  Grid grid_;
  std::vector<GaussianParams> members_;
  std::vector<WaveFunction> states_;
};

/// Builds a frame of `count` packets spaced `delta` apart starting at `start`.
PointerFrame equally_spaced_frame(const Grid& grid, int count, double delta,
                                  double width_a, double start = 0.0);

/// Gram matrix G_ij = <state_i | state_j>; real symmetric with unit diagonal
/// and entries in (0, 1].
Eigen::MatrixXd gram_matrix(const PointerFrame& frame);

/// Number of singular values >= tol * (largest singular value). For the
/// symmetric PSD input this takes, singular values are eigenvalue magnitudes.
/// Throws InvalidArgument for non-symmetric input or tol outside (0, 1), and
/// PreconditionViolation when the input fails PSD-within-1e-10.
int effective_rank(const Eigen::MatrixXd& gram, double tol);

/// Smallest/largest singular value ratio of a symmetric PSD matrix; the
/// conditioning witness reported by the frame-rank experiment.
double singular_value_ratio(const Eigen::MatrixXd& gram);

}  // namespace pointerlab
