#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pointerlab {

enum class Experiment {
  CirculantSpectrum,
  FrameRank,
  DoubleWellSweep,
  NearSymmetrySweep,
  ParityCensus,
  OracleCheck,
};

enum class OutputFormat { Csv, Json };

/// Scalar or list parameter value. Integer-kind parameters are stored as
/// exact doubles and validated for integrality.
using ParamValue = std::variant<double, std::vector<double>>;

/// A validated experiment configuration: every parameter of the chosen
/// experiment present (defaults filled in), every value inside its
/// documented range.
struct ExperimentConfig {
  Experiment experiment = Experiment::CirculantSpectrum;
  std::map<std::string, ParamValue> params;
  std::uint64_t seed = 1;
  std::string output_path;
  OutputFormat format = OutputFormat::Csv;
  bool force = false;
  bool check = false;
};

/// One table cell: a double (ints print without a decimal point) or a plain
/// token such as the row kind.
using Cell = std::variant<double, std::string>;

/// Outcome of one built-in assertion of an experiment.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Results of one experiment run: an ordered table plus metadata. Rows are
/// ordered by the sweep parameter (ascending) and are deterministic for a
/// fixed config and seed. wall_seconds is diagnostic only and excluded from
/// the determinism contract.
struct SweepResult {
  std::string experiment;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::optional<ExperimentConfig> config_echo;
  std::vector<std::pair<std::string, Cell>> extras;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  bool all_checks_passed() const;
};

const char* experiment_name(Experiment e);
Experiment experiment_from_name(const std::string& name);

/// Parses and validates raw key=value parameters for an experiment: unknown
/// keys are rejected, defaults are filled, ranges and cross-parameter
/// constraints are enforced. Throws ConfigError with the parameter name.
std::map<std::string, ParamValue> validate_params(
    Experiment e, const std::map<std::string, std::string>& raw);

/// Validates `config.params` and dispatches to the matching run_* function,
/// attaching the config echo and wall time.
SweepResult run_experiment(const ExperimentConfig& config);

/// Spectrum of the dephased constant density matrix on an n-point grid of
/// length L, kernel strength lambda. Rows: one per eigenvector, eigenvalue
/// descending, with IPR and best plane-wave-pair weight; a trailing
/// comparison row carries the same diagnostics for a Gaussian pointer state
/// of inverse width pointer_a. Eigenvectors are reported in the complex DFT
/// basis, the canonical choice on the exactly degenerate {p, n-p} pairs; the
/// built-in checks verify the Jacobi eigensolver against the DFT route
/// (eigenvalues everywhere, eigenvectors per degeneracy group).
SweepResult run_circulant_spectrum(int n, double length, double lambda,
                                   double pointer_a = 1.0);

/// Effective rank and conditioning of Gram matrices of k Gaussians spaced
/// delta apart (grid n x length, inverse width a, rank tolerance tol).
/// One row per (k, delta) pair, ascending.
SweepResult run_frame_rank(const std::vector<int>& ks,
                           const std::vector<double>& deltas, double a,
                           double tol, int n, double length);

/// Double-well record sweep at coupling a over ascending well asymmetries b.
/// Row: (b, minor component of dominant eigenvector, well-exchange parity of
/// dominant eigenvector, first-order prediction a/(2b)).
SweepResult run_double_well_sweep(double a, const std::vector<double>& b_values);

/// Reflection-symmetry-breaking sweep of the three-level record model at
/// (a, c): for each epsilon, parity and IPR of every eigenvector. Reports the
/// crossover epsilon at which the well doublet (the two largest eigenvalues)
/// first loses definite parity (max |parity| < 0.9).
SweepResult run_near_symmetry_sweep(double a, double c,
                                    const std::vector<double>& epsilon_values);

/// Parity census over seeded random reflection-symmetric matrices of odd
/// dimension 2n+1: per trial the parity counts (expected n+1 symmetric, n
/// antisymmetric), the minimal spectral gap, and a degeneracy flag; trailing
/// summary row carries the pass fraction over non-degenerate trials.
SweepResult run_parity_census(int dim, int trials, std::uint64_t seed);

/// Closed-form versus numeric eigensystem comparison for the three-level
/// record model over a grid of (a, c) values.
SweepResult run_oracle_check(const std::vector<double>& a_values,
                             const std::vector<double>& c_values);

}  // namespace pointerlab
