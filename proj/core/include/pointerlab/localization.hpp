#pragma once

#include <Eigen/Core>
#include <optional>
#include <type_traits>

#include "pointerlab/grid.hpp"

namespace pointerlab {

/// Per-vector localization diagnostics for a unit l2 vector.
///
///  - ipr: inverse participation ratio sum |v_k|^4, in [1/dim, 1];
///    1 for a basis vector, 1/dim for uniform modulus.
///  - top_plane_wave_weight: squared projection onto the best-matching
///    two-dimensional DFT subspace span{e_p, e_{-p}} (one-dimensional for
///    p = 0 and p = n/2), in [0, 1].
///  - parity_score: Re<v, Rv> under the reflection R that the input supports
///    (see `localization` overloads); absent when no reflection is defined.
///  - spatial_stddev: circular standard deviation of the probability weights
///    |v_k|^2 about their circular mean position, in length units; falls back
///    to length/sqrt(12), the uniform-distribution value, when the circular
///    mean is undefined.
struct LocalizationReport {
  double ipr = 0.0;
  double top_plane_wave_weight = 0.0;
  std::optional<double> parity_score;
  double spatial_stddev = 0.0;
};

/// Grid flavor: positions are the grid points, the reflection is the circular
/// one k -> (n-k) mod n (about x = 0), defined for every n.
LocalizationReport localization(const Eigen::VectorXcd& v, const Grid& grid);
LocalizationReport localization(const Eigen::VectorXd& v, const Grid& grid);

/// Abstract-index flavor: indices sit on a circle of circumference dim with
/// unit spacing. parity_score uses the middle-index reflection i -> dim-1-i
/// and is reported for odd dim only.
LocalizationReport localization(const Eigen::VectorXcd& v, int dim);
LocalizationReport localization(const Eigen::VectorXd& v, int dim);

/// Dispatch for segment/column expressions, by scalar type.
template <typename Derived, typename GridOrDim>
LocalizationReport localization(const Eigen::MatrixBase<Derived>& v,
                                const GridOrDim& grid_or_dim) {
  if constexpr (std::is_same_v<typename Derived::Scalar, double>)
    return localization(Eigen::VectorXd(v), grid_or_dim);
  else
    return localization(Eigen::VectorXcd(v), grid_or_dim);
}

/// Parity of a vector under the middle-index reflection R: i -> dim-1-i,
/// defined for odd dimension 2n+1 (index labels n, n-1, ..., -n). Returns
/// <v, Rv>: +1 for symmetric, -1 for antisymmetric, intermediate for mixed.
/// Throws InvalidArgument for even dimension and PreconditionViolation when
/// ||v|| deviates from 1 by more than 1e-10.
double parity_classify(const Eigen::VectorXd& v);

}  // namespace pointerlab
