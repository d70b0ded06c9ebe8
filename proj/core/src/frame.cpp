#include "pointerlab/frame.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "pointerlab/errors.hpp"
#include "pointerlab/spectral.hpp"

namespace pointerlab {

PointerFrame::PointerFrame(const Grid& grid, std::vector<GaussianParams> members)
    : grid_(grid), members_(std::move(members)) {
  if (members_.empty()) throw InvalidArgument("PointerFrame: no members");
  const double a = members_.front().width_a;
  for (const auto& m : members_)
    if (m.width_a != a)
      throw InvalidArgument("PointerFrame: members must share one width_a");
  states_.reserve(members_.size());
  for (const auto& m : members_) states_.push_back(gaussian_state(grid_, m));
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      const double overlap = analytic_overlap(members_[i].center, members_[j].center,
                                              a, grid_.length);
      if (!(overlap > 0.0))
        throw InvalidArgument(
            "PointerFrame: overlap of members " + std::to_string(i) + " and " +
            std::to_string(j) + " underflows to zero; frame too spread out");
    }
}

PointerFrame equally_spaced_frame(const Grid& grid, int count, double delta,
                                  double width_a, double start) {
  if (count < 1) throw InvalidArgument("equally_spaced_frame: count must be >= 1");
  if (!(delta > 0.0) && count > 1)
    throw InvalidArgument("equally_spaced_frame: delta must be positive");
  std::vector<GaussianParams> members;
  members.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    members.push_back(GaussianParams{start + i * delta, width_a});
  return PointerFrame(grid, std::move(members));
}

Eigen::MatrixXd gram_matrix(const PointerFrame& frame) {
  const int k = frame.size();
  Eigen::MatrixXd g(k, k);
  for (int i = 0; i < k; ++i) {
    g(i, i) = inner_product(frame.states()[static_cast<std::size_t>(i)],
                            frame.states()[static_cast<std::size_t>(i)])
                  .real();
    for (int j = i + 1; j < k; ++j) {
      const double v = inner_product(frame.states()[static_cast<std::size_t>(i)],
                                     frame.states()[static_cast<std::size_t>(j)])
                           .real();
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

namespace {

Eigen::VectorXd singular_values_of_symmetric(const Eigen::MatrixXd& gram) {
  if (gram.rows() != gram.cols())
    throw InvalidArgument("effective_rank: matrix not square");
  const double scale = std::max(1.0, gram.cwiseAbs().maxCoeff());
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw InvalidArgument("effective_rank: matrix not symmetric");
  const SpectralResult es = eigh(gram);
  const double top = es.eigenvalues.cwiseAbs().maxCoeff();
  if (es.eigenvalues.minCoeff() < -1e-10 * std::max(1.0, top))
    throw PreconditionViolation("effective_rank: matrix not PSD within 1e-10");
  // Symmetric input: singular values are eigenvalue magnitudes.
  return es.eigenvalues.cwiseAbs();
}

}  // namespace

int effective_rank(const Eigen::MatrixXd& gram, double tol) {
  if (!(tol > 0.0) || !(tol < 1.0))
    throw InvalidArgument("effective_rank: tol must lie in (0, 1)");
  const Eigen::VectorXd sigma = singular_values_of_symmetric(gram);
  const double top = sigma.maxCoeff();
  if (top == 0.0) return 0;
  int count = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma[i] >= tol * top) ++count;
  return count;
}

double singular_value_ratio(const Eigen::MatrixXd& gram) {
  const Eigen::VectorXd sigma = singular_values_of_symmetric(gram);
  const double top = sigma.maxCoeff();
  if (top == 0.0) return 0.0;
  return sigma.minCoeff() / top;
}

}  // namespace pointerlab
