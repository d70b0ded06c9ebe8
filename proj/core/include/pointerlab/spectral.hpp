#pragma once

#include <Eigen/Core>
#include <type_traits>

namespace pointerlab {

/// Eigendecomposition of a real symmetric matrix. Eigenvalues are sorted
/// descending; column i of `eigenvectors` pairs with eigenvalues[i]. Columns
/// are orthonormal and sign-fixed: the largest-magnitude component of each
/// (lowest index on ties) is positive.
struct SpectralResult {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

/// Same contract for complex Hermitian input; the sign convention becomes a
/// phase convention (largest-magnitude component real and positive).
struct ComplexSpectralResult {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

/// Dense symmetric eigensolver: cyclic Jacobi rotations, sweeping until the
/// off-diagonal Frobenius norm falls below 1e-14 * ||A||_F. Deterministic for
/// identical input: fixed pivot order, fixed sign convention, descending
/// eigenvalue sort. Input must be symmetric within 1e-10 (relative to the
/// largest entry magnitude, floored at 1); it is symmetrized before solving.
/// Throws InvalidArgument otherwise.
SpectralResult eigh(const Eigen::MatrixXd& a);

/// Hermitian eigensolver via the standard real embedding
/// [[X, -Y], [Y, X]] of A = X + iY: each eigenvalue of A appears twice in the
/// embedding; one complex eigenvector per pair is extracted and the set is
/// re-orthonormalized. Throws InvalidArgument for non-Hermitian input.
ComplexSpectralResult eigh(const Eigen::MatrixXcd& a);

/// Dispatch for fixed-size and expression inputs, by scalar type.
template <typename Derived>
auto eigh(const Eigen::MatrixBase<Derived>& a)
    -> std::conditional_t<std::is_same_v<typename Derived::Scalar, double>,
                          SpectralResult, ComplexSpectralResult> {
  if constexpr (std::is_same_v<typename Derived::Scalar, double>)
    return eigh(Eigen::MatrixXd(a));
  else
    return eigh(Eigen::MatrixXcd(a));
}

/// Applies the library-wide sign convention in place: the largest-magnitude
/// component (lowest index on ties) is made positive / real-positive.
void canonicalize_sign(Eigen::Ref<Eigen::VectorXd> v);
void canonicalize_phase(Eigen::Ref<Eigen::VectorXcd> v);

}  // namespace pointerlab
