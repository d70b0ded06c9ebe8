#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "pointerlab/dephasing.hpp"
#include "pointerlab/density_matrix.hpp"
#include "pointerlab/dft.hpp"
#include "pointerlab/errors.hpp"
#include "pointerlab/spectral.hpp"

using namespace pointerlab;

namespace {

DensityMatrix grid_density(const Grid& grid, const Eigen::MatrixXcd& entries) {
  DensityMatrix rho;
  rho.basis_tag = BasisTag::PositionGrid;
  rho.grid = grid;
  rho.entries = entries;
  return rho;
}

}  // namespace

TEST_CASE("density_from_mixture of a single state is a rank-1 projector") {
  const Grid g = make_grid(128, 40.0);
  const PointerFrame frame = equally_spaced_frame(g, 1, 1.0, 1.0, 20.0);
  const DensityMatrix rho = density_from_mixture(frame, {1.0});
  CHECK(rho.hermiticity_deviation() == 0.0);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
  const SpectralResult es = eigh(rho.entries.real());
  CHECK(std::abs(es.eigenvalues[0] - 1.0) < 1e-10);
  CHECK(std::abs(es.eigenvalues[1]) < 1e-10);
}

TEST_CASE("density_from_mixture of numerically orthogonal states") {
  const Grid g = make_grid(256, 40.0);
  // Overlap ~ exp(-450): positive, far below double precision resolution.
  const PointerFrame frame(g, {{5.0, 3.0}, {15.0, 3.0}});
  const DensityMatrix rho = density_from_mixture(frame, {0.5, 0.5});
  const SpectralResult es = eigh(rho.entries.real());
  CHECK(std::abs(es.eigenvalues[0] - 0.5) < 1e-12);
  CHECK(std::abs(es.eigenvalues[1] - 0.5) < 1e-12);
  CHECK(std::abs(es.eigenvalues[2]) < 1e-12);
}

TEST_CASE("density_from_mixture matches the 2x2 Gram reduction") {
  const Grid g = make_grid(512, 40.0);
  const PointerFrame frame(g, {{19.0, 1.0}, {20.0, 1.0}});  // distance 1/a
  const double s = inner_product(frame.states()[0], frame.states()[1]).real();
  const DensityMatrix rho = density_from_mixture(frame, {0.5, 0.5});
  const SpectralResult es = eigh(rho.entries.real());
  // Two-state mixture with overlap s: nonzero eigenvalues (1 +- s)/2.
  CHECK(std::abs(es.eigenvalues[0] - (1.0 + s) / 2.0) < 1e-10);
  CHECK(std::abs(es.eigenvalues[1] - (1.0 - s) / 2.0) < 1e-10);
  CHECK(std::abs(es.eigenvalues[2]) < 1e-10);
  CHECK(std::abs(s - std::exp(-0.5)) < 1e-6);
  // PSD witness.
  CHECK(es.eigenvalues.minCoeff() >= -1e-12);
}

TEST_CASE("density_from_mixture validates weights") {
  const Grid g = make_grid(64, 40.0);
  const PointerFrame frame = equally_spaced_frame(g, 2, 1.0, 1.0);
  CHECK_THROWS_AS(density_from_mixture(frame, {1.0}), InvalidArgument);
  CHECK_THROWS_AS(density_from_mixture(frame, {-0.1, 1.1}), InvalidArgument);
  CHECK_THROWS_AS(density_from_mixture(frame, {0.6, 0.6}), InvalidArgument);
}

TEST_CASE("constant_rho is the uniform rank-1 state") {
  const Grid tiny = make_grid(2, 1.0);
  const DensityMatrix rho2 = constant_rho(tiny);
  CHECK(rho2.entries(0, 0).real() == 0.5);
  CHECK(rho2.entries(0, 1).real() == 0.5);
  CHECK(std::abs(rho2.trace().real() - 1.0) < 1e-15);

  const Grid g = make_grid(8, 4.0);
  const SpectralResult es = eigh(constant_rho(g).entries.real());
  CHECK(std::abs(es.eigenvalues[0] - 1.0) < 1e-12);
  for (int i = 1; i < 8; ++i) CHECK(std::abs(es.eigenvalues[i]) < 1e-12);
  const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(8, 1.0 / std::sqrt(8.0));
  CHECK((es.eigenvectors.col(0) - uniform).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dephasing kernel structure") {
  const Grid g = make_grid(128, 40.0);
  const DephasingKernel kernel(0.5, g);
  CHECK(kernel.first_row()[0] == 1.0);
  for (int d = 1; d < 128; ++d) {
    CHECK(kernel.first_row()[d] == kernel.first_row()[128 - d]);
    CHECK(kernel.first_row()[d] < 1.0);
    CHECK(kernel.first_row()[d] > 0.0);
  }
  // PSD through the independent DFT route.
  const Eigen::VectorXcd fourier = oracles::naive_dft(kernel.first_row());
  double max_coeff = 0.0, min_coeff = 1e300;
  for (int p = 0; p < 128; ++p) {
    max_coeff = std::max(max_coeff, fourier[p].real());
    min_coeff = std::min(min_coeff, fourier[p].real());
    CHECK(std::abs(fourier[p].imag()) < 1e-9);
  }
  CHECK(min_coeff >= -1e-12 * max_coeff);

  CHECK_THROWS_AS(DephasingKernel(-0.1, g), InvalidArgument);
}

TEST_CASE("lambda = 0 kernel is the exact identity for dephasing") {
  const Grid g = make_grid(64, 40.0);
  const DephasingKernel identity(0.0, g);
  const Eigen::MatrixXcd entries = oracles::random_psd_unit_trace(64, 17, true);
  const DensityMatrix rho = grid_density(g, entries);
  const DensityMatrix out = dephase(rho, identity);
  CHECK(oracles::bitwise_equal(out.entries, rho.entries));
}

TEST_CASE("dephase preserves the diagonal exactly and the trace") {
  const Grid g = make_grid(64, 40.0);
  const DephasingKernel kernel(0.7, g);
  const DensityMatrix rho = grid_density(g, oracles::random_psd_unit_trace(64, 21, true));
  const DensityMatrix out = dephase(rho, kernel);
  for (int i = 0; i < 64; ++i) CHECK(out.entries(i, i) == rho.entries(i, i));
  CHECK(std::abs(out.trace() - rho.trace()) < 1e-15);
}

TEST_CASE("dephase input validation") {
  const Grid g = make_grid(64, 40.0);
  const Grid other = make_grid(32, 40.0);
  const DephasingKernel kernel(0.5, g);
  const DensityMatrix wrong_grid =
      grid_density(other, oracles::random_psd_unit_trace(32, 3, false));
  CHECK_THROWS_AS(dephase(wrong_grid, kernel), InvalidArgument);

  DensityMatrix abstract;
  abstract.basis_tag = BasisTag::AbstractIndex;
  abstract.entries = oracles::random_psd_unit_trace(64, 4, false);
  CHECK_THROWS_AS(dephase(abstract, kernel), InvalidArgument);
}

TEST_CASE("dephased constant rho is circulant with wrapped-Gaussian rows") {
  const Grid g = make_grid(256, 40.0);
  const DensityMatrix rho_r = dephase(constant_rho(g), DephasingKernel(0.5, g));
  CHECK(rho_r.is_real());
  const Eigen::MatrixXd matrix = rho_r.entries.real();
  CHECK(circulant_deviation(matrix) <= 1e-14);

  // Eigenvalues against the independent DFT oracle on the first row.
  const Eigen::VectorXcd fourier = oracles::naive_dft(matrix.row(0).transpose());
  Eigen::VectorXd expected(256);
  for (int p = 0; p < 256; ++p) expected[p] = fourier[p].real();
  std::sort(expected.data(), expected.data() + 256, std::greater<double>());
  const SpectralResult es = eigh(matrix);
  CHECK((es.eigenvalues - expected).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(es.eigenvalues.minCoeff() >= -1e-10);
}

TEST_CASE("dephase preserves PSD, Hermiticity and trace on random inputs") {
  // Module invariant: Schur product with a PSD kernel; 100 seeded matrices.
  const Grid g = make_grid(64, 40.0);
  const DephasingKernel kernel(0.5, g);
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const bool complex_valued = trial % 2 == 1;
    const DensityMatrix rho =
        grid_density(g, oracles::random_psd_unit_trace(64, rng.next(), complex_valued));
    const DensityMatrix out = dephase(rho, kernel);
    CHECK(out.hermiticity_deviation() <= 1e-12);
    CHECK(std::abs(out.trace() - rho.trace()) <= 1e-12);
    CHECK(oracles::reference_min_eigenvalue(out.entries) >= -1e-9);
  }
}

TEST_CASE("off-diagonal magnitudes are monotone in lambda") {
  const Grid g = make_grid(48, 40.0);
  const DensityMatrix rho = grid_density(g, oracles::random_psd_unit_trace(48, 9, true));
  Eigen::MatrixXd previous = rho.entries.cwiseAbs();
  for (double lambda : {0.1, 0.3, 1.0, 3.0}) {
    const Eigen::MatrixXd current =
        dephase(rho, DephasingKernel(lambda, g)).entries.cwiseAbs();
    for (int i = 0; i < 48; ++i)
      for (int j = 0; j < 48; ++j)
        if (i != j) CHECK(current(i, j) <= previous(i, j) + 1e-15);
    previous = current;
  }
}

TEST_CASE("dephasing composes additively in lambda") {
  const Grid g = make_grid(64, 40.0);
  const DensityMatrix rho = grid_density(g, oracles::random_psd_unit_trace(64, 33, true));
  const DensityMatrix twice =
      dephase(dephase(rho, DephasingKernel(0.3, g)), DephasingKernel(0.45, g));
  const DensityMatrix once = dephase(rho, DephasingKernel(0.75, g));
  CHECK((twice.entries - once.entries).cwiseAbs().maxCoeff() < 1e-12);
}
