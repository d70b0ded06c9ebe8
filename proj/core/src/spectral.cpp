#include "pointerlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "pointerlab/errors.hpp"

namespace pointerlab {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  double sum = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) sum += 2.0 * a(p, q) * a(p, q);
  return std::sqrt(sum);
}

// Cyclic Jacobi on a symmetric matrix held in full storage. Returns
// (diagonal, accumulated rotations); A is destroyed.
void jacobi_cyclic(Eigen::MatrixXd& a, Eigen::MatrixXd& v) {
  const int n = static_cast<int>(a.rows());
  v = Eigen::MatrixXd::Identity(n, n);
  const double norm_f = a.norm();
  if (norm_f == 0.0) return;
  const double threshold = 1e-14 * norm_f;
  // Pivots below this contribute at most threshold/2 to the off-diagonal
  // Frobenius norm in aggregate and are skipped instead of rotated.
  const double pivot_floor = threshold / (2.0 * n);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) return;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= pivot_floor) continue;

        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const double app = a(p, p), aqq = a(q, q);
        a(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        a(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
          a(p, r) = a(r, p);
          a(q, r) = a(r, q);
        }
        for (int r = 0; r < n; ++r) {
          const double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  throw Error("eigh: Jacobi sweep limit exceeded (non-finite input?)");
}

void check_symmetric(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("eigh: matrix is not square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double dev = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (dev > 1e-10 * scale)
    throw InvalidArgument("eigh: matrix is not symmetric (max deviation " +
                          std::to_string(dev) + ")");
}

void check_hermitian(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("eigh: matrix is not square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-10 * scale)
    throw InvalidArgument("eigh: matrix is not Hermitian (max deviation " +
                          std::to_string(dev) + ")");
}

std::vector<int> descending_order(const Eigen::VectorXd& values) {
  std::vector<int> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return values[i] > values[j]; });
  return order;
}

}  // namespace

void canonicalize_sign(Eigen::Ref<Eigen::VectorXd> v) {
  int imax = 0;
  double amax = -1.0;
  for (int i = 0; i < v.size(); ++i) {
    const double m = std::abs(v[i]);
    if (m > amax) {
      amax = m;
      imax = i;
    }
  }
  if (v[imax] < 0.0) v = -v;
}

void canonicalize_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  int imax = 0;
  double amax = -1.0;
  for (int i = 0; i < v.size(); ++i) {
    const double m = std::abs(v[i]);
    if (m > amax) {
      amax = m;
      imax = i;
    }
  }
  if (amax == 0.0) return;
  const std::complex<double> phase = v[imax] / std::abs(v[imax]);
  v /= phase;
  v[imax] = std::complex<double>(std::abs(v[imax]), 0.0);
}

SpectralResult eigh(const Eigen::MatrixXd& a) {
  check_symmetric(a);
  Eigen::MatrixXd work = 0.5 * (a + a.transpose().eval());
  Eigen::MatrixXd rotations;
  jacobi_cyclic(work, rotations);

  const Eigen::VectorXd raw = work.diagonal();
  const std::vector<int> order = descending_order(raw);

  SpectralResult out;
  const int n = static_cast<int>(a.rows());
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.eigenvalues[i] = raw[order[static_cast<std::size_t>(i)]];
    out.eigenvectors.col(i) = rotations.col(order[static_cast<std::size_t>(i)]);
    canonicalize_sign(out.eigenvectors.col(i));
  }
  return out;
}

ComplexSpectralResult eigh(const Eigen::MatrixXcd& a) {
  check_hermitian(a);
  const int n = static_cast<int>(a.rows());
  const Eigen::MatrixXcd h = 0.5 * (a + a.adjoint().eval());

  // Real embedding: A = X + iY (X symmetric, Y antisymmetric) maps to the
  // 2n x 2n symmetric [[X, -Y], [Y, X]]. Each complex eigenvector w shows up
  // as the two embedded vectors [Re w; Im w] and [-Im w; Re w], so every
  // eigenvalue is duplicated and n independent complex vectors remain.
  Eigen::MatrixXd embedded(2 * n, 2 * n);
  embedded.topLeftCorner(n, n) = h.real();
  embedded.bottomRightCorner(n, n) = h.real();
  embedded.topRightCorner(n, n) = -h.imag();
  embedded.bottomLeftCorner(n, n) = h.imag();

  const SpectralResult er = eigh(embedded);

  ComplexSpectralResult out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  int accepted = 0;
  for (int i = 0; i < 2 * n && accepted < n; ++i) {
    Eigen::VectorXcd cand(n);
    cand.real() = er.eigenvectors.col(i).head(n);
    cand.imag() = er.eigenvectors.col(i).tail(n);
    // Project out previously accepted vectors; duplicates collapse to ~0.
    for (int j = 0; j < accepted; ++j)
      cand -= out.eigenvectors.col(j).dot(cand) * out.eigenvectors.col(j);
    const double residual = cand.norm();
    if (residual < 1e-6) continue;
    out.eigenvectors.col(accepted) = cand / residual;
    out.eigenvalues[accepted] = er.eigenvalues[i];
    ++accepted;
  }
  if (accepted != n)
    throw Error("eigh: complex eigenvector extraction failed to span");

  for (int i = 0; i < n; ++i) canonicalize_phase(out.eigenvectors.col(i));
  return out;
}

}  // namespace pointerlab
