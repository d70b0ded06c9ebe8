#include "pointerlab/record_models.hpp"

#include <cmath>
#include <string>

#include "pointerlab/errors.hpp"
#include "pointerlab/rng.hpp"

namespace pointerlab {

Eigen::Matrix2d record_matrix(const RecordModel2& model) {
  Eigen::Matrix2d m;
  m << 1.0 + model.b, model.a, model.a, 1.0 - model.b;
  return m;
}

Eigen::Matrix3d record_matrix(const RecordModel3& model) {
  Eigen::Matrix3d m;
  m << 1.0, model.a, 0.0, model.a, model.c, model.a, 0.0, model.a,
      1.0 + model.epsilon;
  return m;
}

SpectralResult oracle_2x2(const RecordModel2& model) {
  if (model.a == 0.0 && model.b == 0.0)
    throw DegenerateInput("oracle_2x2: a = b = 0 is fully degenerate");
  const double radius = std::hypot(model.a, model.b);
  const double t = 0.5 * std::atan2(model.a, model.b);
  const double ct = std::cos(t), st = std::sin(t);

  SpectralResult out;
  out.eigenvalues.resize(2);
  out.eigenvectors.resize(2, 2);
  out.eigenvalues << 1.0 + radius, 1.0 - radius;
  out.eigenvectors.col(0) << ct, st;
  out.eigenvectors.col(1) << -st, ct;
  canonicalize_sign(out.eigenvectors.col(0));
  canonicalize_sign(out.eigenvectors.col(1));
  return out;
}

void oracle_3x3_mixing(double a, double c, double& s_plus, double& s_minus) {
  const double r = std::sqrt((1.0 - c) * (1.0 - c) + 8.0 * a * a);
  // 4a/(1-c+r) and 4a/(1-c-r) rationalized so that neither branch subtracts
  // nearly equal quantities, whatever the sign of 1-c.
  if (c <= 1.0) {
    s_plus = 4.0 * a / ((1.0 - c) + r);
    s_minus = -((1.0 - c) + r) / (2.0 * a);
  } else {
    s_plus = (r + (c - 1.0)) / (2.0 * a);
    s_minus = -4.0 * a / (r + (c - 1.0));
  }
}

SpectralResult oracle_3x3(double a, double c) {
  if (!(a > 0.0))
    throw InvalidArgument("oracle_3x3: a must be positive, got " +
                          std::to_string(a));
  const double r = std::sqrt((1.0 - c) * (1.0 - c) + 8.0 * a * a);
  double s_plus, s_minus;
  oracle_3x3_mixing(a, c, s_plus, s_minus);

  SpectralResult out;
  out.eigenvalues.resize(3);
  out.eigenvectors.resize(3, 3);
  // Descending always: (1+c+r)/2 >= 1 >= (1+c-r)/2, strict for a > 0.
  out.eigenvalues << (1.0 + c + r) / 2.0, 1.0, (1.0 + c - r) / 2.0;
  const double np = std::sqrt(2.0 + s_plus * s_plus);
  const double nm = std::sqrt(2.0 + s_minus * s_minus);
  out.eigenvectors.col(0) << 1.0 / np, s_plus / np, 1.0 / np;
  out.eigenvectors.col(1) << 1.0 / std::sqrt(2.0), 0.0, -1.0 / std::sqrt(2.0);
  out.eigenvectors.col(2) << 1.0 / nm, s_minus / nm, 1.0 / nm;
  for (int i = 0; i < 3; ++i) canonicalize_sign(out.eigenvectors.col(i));
  return out;
}

Eigen::MatrixXd random_reflection_symmetric(int dim, std::uint64_t seed) {
  if (dim % 2 == 0 || dim < 3)
    throw InvalidArgument("random_reflection_symmetric: dim must be odd and >= 3, got " +
                          std::to_string(dim));
  SplitMix64 rng(seed);
  Eigen::MatrixXd m(dim, dim);
  // Orbit of (i, j) under transpose and reflection: (i,j), (j,i), (Ri,Rj),
  // (Rj,Ri) with R(i) = dim-1-i. Draw once per orbit, in row-major order of
  // the orbit's lexicographically smallest upper-triangle representative.
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      const int ri = dim - 1 - i, rj = dim - 1 - j;
      const int pi = std::min(ri, rj), pj = std::max(ri, rj);
      if (pi < i || (pi == i && pj < j)) continue;  // partner already drawn
      const double u = rng.uniform_symmetric_nonzero();
      m(i, j) = u;
      m(j, i) = u;
      m(pi, pj) = u;
      m(pj, pi) = u;
    }
  }
  return m;
}

}  // namespace pointerlab
