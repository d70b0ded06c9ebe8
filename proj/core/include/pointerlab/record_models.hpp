#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "pointerlab/spectral.hpp"

namespace pointerlab {

/// Two-level record model: matrix [[1+b, a], [a, 1-b]]. b is the well
/// asymmetry, a the off-diagonal coupling.
struct RecordModel2 {
  double a = 0.0;
  double b = 0.0;
};

/// Three-level record model: matrix [[1, a, 0], [a, c, a], [0, a, 1+epsilon]].
/// epsilon = 0 is the exactly reflection-symmetric case.
struct RecordModel3 {
  double a = 0.0;
  double c = 0.0;
  double epsilon = 0.0;
};

Eigen::Matrix2d record_matrix(const RecordModel2& model);
Eigen::Matrix3d record_matrix(const RecordModel3& model);

/// Closed-form eigensystem of the two-level record model:
/// eigenvalues 1 +- sqrt(a^2 + b^2), eigenvectors (cos t, sin t) and
/// (-sin t, cos t) with t = atan2(a, b) / 2. Throws DegenerateInput at
/// a = b = 0 where every direction is an eigenvector.
SpectralResult oracle_2x2(const RecordModel2& model);

/// Closed-form eigensystem of the symmetric three-level model (epsilon = 0):
/// eigenvalues ((1+c+r)/2, 1, (1+c-r)/2) with r = sqrt((1-c)^2 + 8a^2), and
/// eigenvectors (1, s+, 1), (1, 0, -1), (1, s-, 1) with s+- = 4a/(1-c +- r),
/// normalized and sorted descending. Evaluated in cancellation-free form.
/// Throws InvalidArgument for a <= 0.
SpectralResult oracle_3x3(double a, double c);

/// The s+- mixing coefficients of oracle_3x3; s+ ~ 2a and s- ~ -1/a for
/// small a and c.
void oracle_3x3_mixing(double a, double c, double& s_plus, double& s_minus);

/// Seeded random symmetric matrix with the reflection symmetry
/// M(i, j) = M(dim-1-i, dim-1-j), all entries nonzero, entries drawn
/// uniform(-1, 1) over a fundamental domain of the symmetry group and
/// mirrored. Deterministic per seed (SplitMix64). Throws InvalidArgument for
/// even dim or dim < 3.
Eigen::MatrixXd random_reflection_symmetric(int dim, std::uint64_t seed);

}  // namespace pointerlab
