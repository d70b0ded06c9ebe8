#include "pointerlab/dft.hpp"

#include <cmath>
#include <complex>

#include "pointerlab/errors.hpp"

namespace pointerlab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Eigen::VectorXcd dft_unitary(const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(v.size());
  if (n == 0) throw InvalidArgument("dft_unitary: empty vector");
  Eigen::VectorXcd out(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int p = 0; p < n; ++p) {
    std::complex<double> acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      const double phase = -kTwoPi * static_cast<double>(static_cast<long long>(p) * k % n) / n;
      acc += v[k] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    out[p] = acc * scale;
  }
  return out;
}

Eigen::VectorXcd plane_wave(int n, int p) {
  if (n <= 0) throw InvalidArgument("plane_wave: n must be positive");
  Eigen::VectorXcd v(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) {
    const double phase = kTwoPi * static_cast<double>(static_cast<long long>(p) * k % n) / n;
    v[k] = scale * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return v;
}

Eigen::VectorXd circulant_eigenvalues(const Eigen::VectorXd& first_row) {
  const int n = static_cast<int>(first_row.size());
  if (n == 0) throw InvalidArgument("circulant_eigenvalues: empty row");
  Eigen::VectorXd c(n);
  for (int p = 0; p < n; ++p) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j)
      acc += first_row[j] * std::cos(kTwoPi * static_cast<double>(static_cast<long long>(p) * j % n) / n);
    c[p] = acc;
  }
  return c;
}

double circulant_deviation(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  if (n != m.cols()) throw InvalidArgument("circulant_deviation: matrix not square");
  double dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int d = ((j - i) % n + n) % n;
      dev = std::max(dev, std::abs(m(i, j) - m(0, d)));
    }
  return dev;
}

}  // namespace pointerlab
