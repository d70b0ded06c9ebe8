#include "pointerlab/localization.hpp"

#include <cmath>
#include <complex>

#include "pointerlab/dft.hpp"
#include "pointerlab/errors.hpp"

namespace pointerlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_unit(const Eigen::VectorXcd& v) {
  if (v.size() == 0) throw InvalidArgument("localization: empty vector");
  if (std::abs(v.norm() - 1.0) > 1e-10)
    throw PreconditionViolation("localization: vector is not unit norm");
}

double ipr_of(const Eigen::VectorXcd& v) {
  double acc = 0.0;
  for (int k = 0; k < v.size(); ++k) {
    const double w = std::norm(v[k]);
    acc += w * w;
  }
  return acc;
}

double top_pair_weight(const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(v.size());
  const Eigen::VectorXcd f = dft_unitary(v);
  double best = 0.0;
  for (int p = 0; p <= n / 2; ++p) {
    const int mirror = (n - p) % n;
    double w = std::norm(f[p]);
    if (mirror != p) w += std::norm(f[mirror]);
    best = std::max(best, w);
  }
  return best;
}

// Circular std of the weights |v_k|^2 placed at positions x_k on a circle of
// circumference `length`.
double circular_stddev(const Eigen::VectorXcd& v, double length,
                       double position_of_first, double spacing) {
  const int n = static_cast<int>(v.size());
  std::complex<double> resultant(0.0, 0.0);
  for (int k = 0; k < n; ++k) {
    const double angle = kTwoPi * (position_of_first + k * spacing) / length;
    resultant += std::norm(v[k]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  if (std::abs(resultant) < 1e-12) return length / std::sqrt(12.0);
  const double mean = std::arg(resultant) / kTwoPi * length;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double d = periodic_distance(position_of_first + k * spacing, mean, length);
    acc += std::norm(v[k]) * d * d;
  }
  return std::sqrt(acc);
}

double circular_reflection_parity(const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(v.size());
  std::complex<double> acc(0.0, 0.0);
  for (int k = 0; k < n; ++k) acc += std::conj(v[k]) * v[(n - k) % n];
  return acc.real();
}

double middle_reflection_parity(const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(v.size());
  std::complex<double> acc(0.0, 0.0);
  for (int k = 0; k < n; ++k) acc += std::conj(v[k]) * v[n - 1 - k];
  return acc.real();
}

}  // namespace

LocalizationReport localization(const Eigen::VectorXcd& v, const Grid& grid) {
  require_unit(v);
  if (static_cast<int>(v.size()) != grid.n_points)
    throw InvalidArgument("localization: vector length does not match grid");
  LocalizationReport r;
  r.ipr = ipr_of(v);
  r.top_plane_wave_weight = top_pair_weight(v);
  r.parity_score = circular_reflection_parity(v);
  r.spatial_stddev = circular_stddev(v, grid.length, 0.0, grid.spacing);
  return r;
}

LocalizationReport localization(const Eigen::VectorXd& v, const Grid& grid) {
  return localization(Eigen::VectorXcd(v.cast<std::complex<double>>()), grid);
}

LocalizationReport localization(const Eigen::VectorXcd& v, int dim) {
  require_unit(v);
  if (static_cast<int>(v.size()) != dim)
    throw InvalidArgument("localization: vector length does not match dim");
  LocalizationReport r;
  r.ipr = ipr_of(v);
  r.top_plane_wave_weight = top_pair_weight(v);
  if (dim % 2 == 1) r.parity_score = middle_reflection_parity(v);
  r.spatial_stddev = circular_stddev(v, static_cast<double>(dim), 0.0, 1.0);
  return r;
}

LocalizationReport localization(const Eigen::VectorXd& v, int dim) {
  return localization(Eigen::VectorXcd(v.cast<std::complex<double>>()), dim);
}

double parity_classify(const Eigen::VectorXd& v) {
  const int n = static_cast<int>(v.size());
  if (n % 2 == 0)
    throw InvalidArgument(
        "parity_classify: reflection center undefined for even dimension " +
        std::to_string(n));
  if (std::abs(v.norm() - 1.0) > 1e-10)
    throw PreconditionViolation("parity_classify: vector is not unit norm");
  double acc = 0.0;
  for (int k = 0; k < n; ++k) acc += v[k] * v[n - 1 - k];
  return acc;
}

}  // namespace pointerlab
