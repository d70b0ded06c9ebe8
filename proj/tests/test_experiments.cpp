#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "oracles.hpp"
#include "pointerlab/emit.hpp"
#include "pointerlab/errors.hpp"
#include "pointerlab/experiments.hpp"

using namespace pointerlab;
namespace fs = std::filesystem;

namespace {

double cell_number(const Cell& cell) { return std::get<double>(cell); }

std::string cell_token(const Cell& cell) { return std::get<std::string>(cell); }

const Cell& find_extra(const SweepResult& r, const std::string& name) {
  for (const auto& e : r.extras)
    if (e.first == name) return e.second;
  throw std::runtime_error("missing extra " + name);
}

ExperimentConfig make_config(Experiment e,
                             const std::map<std::string, std::string>& raw) {
  ExperimentConfig config;
  config.experiment = e;
  config.params = validate_params(e, raw);
  return config;
}

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pointerlab_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("circulant spectrum rows and checks at the reference size") {
  const SweepResult r = run_circulant_spectrum(256, 40.0, 0.5);
  for (const auto& check : r.checks) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
  }
  REQUIRE(r.rows.size() == 257);
  double max_ipr = 0.0;
  double previous = 1e300;
  for (int i = 0; i < 256; ++i) {
    const auto& row = r.rows[static_cast<std::size_t>(i)];
    CHECK(cell_token(row[0]) == "eigenvector");
    const double eigenvalue = cell_number(row[2]);
    CHECK(eigenvalue <= previous);
    previous = eigenvalue;
    max_ipr = std::max(max_ipr, cell_number(row[3]));
    CHECK(cell_number(row[4]) >= 1.0 - 1e-8);
  }
  CHECK(max_ipr <= 2.0 / 256.0);
  const auto& pointer_row = r.rows.back();
  CHECK(cell_token(pointer_row[0]) == "pointer_state");
  CHECK(cell_number(pointer_row[3]) >= 10.0 * max_ipr);
}

TEST_CASE("circulant spectrum with lambda = 0 reduces to constant rho") {
  const SweepResult r = run_circulant_spectrum(64, 40.0, 0.0);
  CHECK(r.all_checks_passed());
  CHECK(cell_number(r.rows[0][2]) == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 1; i < 64; ++i)
    CHECK(std::abs(cell_number(r.rows[static_cast<std::size_t>(i)][2])) < 1e-12);
}

TEST_CASE("small grid keeps every degeneracy group isolated") {
  // At n=16, L=8 the whole spectrum sits far above the noise floor, so the
  // raw Jacobi eigenvectors themselves must live on single plane-wave pairs.
  const SweepResult r = run_circulant_spectrum(16, 8.0, 0.5, 3.0);
  for (const auto& check : r.checks) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
  }
}

TEST_CASE("circulant spectrum rejects undersized grids") {
  CHECK_THROWS_AS(run_circulant_spectrum(8, 40.0, 0.5), ConfigError);
}

TEST_CASE("frame rank sweep reproduces the conditioning contrast") {
  const SweepResult full = run_frame_rank({3}, {1.0}, 1.0, 1e-8, 512, 40.0);
  CHECK(full.all_checks_passed());
  CHECK(cell_number(full.rows[0][2]) == 3.0);

  const SweepResult crowded = run_frame_rank({10}, {0.01}, 1.0, 1e-8, 512, 40.0);
  CHECK(crowded.all_checks_passed());
  CHECK(cell_number(crowded.rows[0][2]) < 10.0);
  CHECK(cell_number(crowded.rows[0][3]) < 1e-8);

  const SweepResult single = run_frame_rank({1}, {1.0}, 1.0, 0.999, 512, 40.0);
  CHECK(cell_number(single.rows[0][2]) == 1.0);

  CHECK_THROWS_AS(run_frame_rank({3}, {1.0}, 1.0, 2.0, 512, 40.0), ConfigError);
  CHECK_THROWS_AS(run_frame_rank({3, 2}, {1.0}, 1.0, 1e-8, 512, 40.0), ConfigError);
}

TEST_CASE("double-well sweep localization crossover") {
  const SweepResult r = run_double_well_sweep(0.01, {0.0, 0.1, 0.2, 0.5, 1.0});
  for (const auto& check : r.checks) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
  }
  REQUIRE(r.rows.size() == 5);

  // b = 0: fully delocalized doublet, infinite prediction.
  CHECK(cell_number(r.rows[0][1]) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(cell_number(r.rows[0][2])) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::isinf(cell_number(r.rows[0][3])));

  // b = 0.5: minor component within 10% of a/(2b) = 0.01.
  CHECK(cell_number(r.rows[3][1]) == doctest::Approx(0.01).epsilon(0.10));
  // b = 100 a: minor component below 0.006.
  CHECK(cell_number(r.rows[4][1]) < 0.006);

  CHECK(cell_number(find_extra(r, "crossover_b")) == 0.1);

  CHECK_THROWS_AS(run_double_well_sweep(0.0, {0.1}), ConfigError);
  CHECK_THROWS_AS(run_double_well_sweep(0.01, {0.5, 0.1}), ConfigError);
}

TEST_CASE("near-symmetry sweep continuity and crossover") {
  const std::vector<double> eps = {0.0, 1e-6, 1e-4, 1e-2, 0.1, 1.0};
  const SweepResult r = run_near_symmetry_sweep(0.1, 0.0, eps);
  for (const auto& check : r.checks) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
  }
  REQUIRE(r.rows.size() == 18);

  // Epsilon = 0 rows carry parities (+1, +1, -1) as a multiset.
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) sum += cell_number(r.rows[static_cast<std::size_t>(i)][3]);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-7));

  const double crossover = cell_number(find_extra(r, "crossover_epsilon"));
  CHECK(crossover >= 0.01);
  CHECK(crossover <= 1.0);

  // At eps = 10a = 1 the well doublet has localized: both parities well
  // below the 0.9 threshold.
  const double doublet_parity =
      std::max(std::abs(cell_number(r.rows[15][3])), std::abs(cell_number(r.rows[16][3])));
  CHECK(doublet_parity < 0.9);

  CHECK_THROWS_AS(run_near_symmetry_sweep(0.1, 0.0, {1e-3, 1e-2}), ConfigError);
  CHECK_THROWS_AS(run_near_symmetry_sweep(-1.0, 0.0, eps), ConfigError);
}

TEST_CASE("parity census counts n+1 and n") {
  for (int dim : {3, 5}) {
    const SweepResult r = run_parity_census(dim, 100, 1);
    for (const auto& check : r.checks) {
      INFO(dim, " ", check.name, ": ", check.detail);
      CHECK(check.passed);
    }
    REQUIRE(r.rows.size() == 101);
    const int half = (dim - 1) / 2;
    int degenerate = 0;
    for (int t = 0; t < 100; ++t) {
      const auto& row = r.rows[static_cast<std::size_t>(t)];
      if (cell_number(row[5]) == 1.0) {
        ++degenerate;
        continue;
      }
      CHECK(cell_number(row[2]) == double(half + 1));
      CHECK(cell_number(row[3]) == double(half));
      CHECK(cell_number(row[4]) <= 1e-8);
    }
    CHECK(degenerate <= 5);
    CHECK(cell_number(r.rows.back()[6]) == 1.0);  // summary pass fraction
  }
  CHECK_THROWS_AS(run_parity_census(4, 10, 1), ConfigError);
  CHECK_THROWS_AS(run_parity_census(5, 0, 1), ConfigError);
}

TEST_CASE("parity census is seed-deterministic") {
  const SweepResult a = run_parity_census(5, 10, 12345);
  const SweepResult b = run_parity_census(5, 10, 12345);
  const SweepResult c = run_parity_census(5, 10, 54321);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    for (std::size_t j = 0; j < a.rows[i].size(); ++j)
      CHECK(format_cell(a.rows[i][j]) == format_cell(b.rows[i][j]));
  bool any_difference = false;
  for (std::size_t i = 0; i < a.rows.size() && !any_difference; ++i)
    for (std::size_t j = 0; j < a.rows[i].size(); ++j)
      if (format_cell(a.rows[i][j]) != format_cell(c.rows[i][j])) any_difference = true;
  CHECK(any_difference);
}

TEST_CASE("oracle check over the acceptance grid") {
  const SweepResult r = run_oracle_check({1e-3, 1e-2, 0.1, 0.5, 1.0},
                                         {-0.5, -0.1, 0.0, 0.1, 0.5});
  for (const auto& check : r.checks) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
  }
  CHECK(r.rows.size() == 25);
}

TEST_CASE("validate_params fills defaults and rejects junk") {
  const auto params = validate_params(Experiment::CirculantSpectrum, {});
  CHECK(std::get<double>(params.at("n")) == 256.0);
  CHECK(std::get<double>(params.at("L")) == 40.0);
  CHECK(std::get<double>(params.at("lambda")) == 0.5);

  CHECK_THROWS_WITH_AS(
      validate_params(Experiment::CirculantSpectrum, {{"bogus", "1"}}),
      doctest::Contains("bogus"), ConfigError);
  CHECK_THROWS_WITH_AS(validate_params(Experiment::CirculantSpectrum, {{"n", "8"}}),
                       doctest::Contains("'n'"), ConfigError);
  CHECK_THROWS_WITH_AS(validate_params(Experiment::CirculantSpectrum, {{"n", "8.5"}}),
                       doctest::Contains("'n'"), ConfigError);
  CHECK_THROWS_WITH_AS(validate_params(Experiment::CirculantSpectrum, {{"n", "abc"}}),
                       doctest::Contains("'n'"), ConfigError);
  CHECK_THROWS_AS(validate_params(Experiment::ParityCensus, {{"dim", "4"}}), ConfigError);
  CHECK_THROWS_AS(
      validate_params(Experiment::NearSymmetrySweep, {{"epsilon", "1e-3,1e-2"}}),
      ConfigError);
  CHECK_THROWS_AS(validate_params(Experiment::DoubleWellSweep, {{"b", "0.5,0.1"}}),
                  ConfigError);
  CHECK_THROWS_AS(validate_params(Experiment::FrameRank, {{"delta", "30"}}), ConfigError);
}

TEST_CASE("csv schema is pinned for the double-well sweep") {
  ExperimentConfig config = make_config(Experiment::DoubleWellSweep, {});
  const SweepResult r = run_experiment(config);
  const std::string csv = to_csv(r);
  CHECK(csv.rfind("b,minor_component,parity_score,prediction\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');
  // b = 0 row: prediction serializes as inf in CSV.
  CHECK(csv.find("0,0.70710678118654746,") != std::string::npos);
  CHECK(csv.find(",inf\n") != std::string::npos);
}

TEST_CASE("float formatting is 17-significant-digit and lossless") {
  CHECK(format_float17(0.5) == "0.5");
  CHECK(format_float17(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_float17(3.0) == "3");
  CHECK(format_float17(std::nan("")) == "nan");
  CHECK(format_float17(INFINITY) == "inf");
  CHECK(format_float17(-INFINITY) == "-inf");
  const double value = 0.1234567890123456789;
  CHECK(std::stod(format_float17(value)) == value);
}

TEST_CASE("json round-trips the in-memory result") {
  ExperimentConfig config = make_config(Experiment::DoubleWellSweep,
                                        {{"a", "0.01"}, {"b", "0,0.25,0.5"}});
  config.seed = 9;
  const SweepResult r = run_experiment(config);
  const nlohmann::json doc = nlohmann::json::parse(to_json(r));

  CHECK(doc["metadata"]["experiment"] == "double-well");
  CHECK(doc["metadata"]["version"] == "pointerlab 0.1.0");
  CHECK(doc["metadata"]["config"]["a"] == 0.01);
  CHECK(doc["metadata"]["config"]["seed"] == 9);
  CHECK(doc["metadata"]["config"]["b"].size() == 3);
  CHECK(doc["metadata"].contains("run"));

  REQUIRE(doc["rows"].size() == r.rows.size());
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = doc["rows"][i];
    CHECK(row["b"].get<double>() == cell_number(r.rows[i][0]));
    CHECK(row["minor_component"].get<double>() == cell_number(r.rows[i][1]));
  }
  // Non-finite prediction at b = 0 becomes null in JSON.
  CHECK(doc["rows"][0]["prediction"].is_null());

  // Check outcomes are part of the document.
  bool found = false;
  for (const auto& check : doc["metadata"]["checks"])
    if (check["name"] == "oracle_matches_eigh") found = check["passed"].get<bool>();
  CHECK(found);
}

TEST_CASE("emission is deterministic and honors overwrite rules") {
  ExperimentConfig config = make_config(Experiment::NearSymmetrySweep, {});
  config.seed = 3;
  const SweepResult first = run_experiment(config);
  const SweepResult second = run_experiment(config);
  CHECK(to_csv(first) == to_csv(second));
  CHECK(to_json(first, false) == to_json(second, false));

  const fs::path path = temp_file("emission.csv");
  fs::remove(path);
  config.output_path = path.string();
  emit(first, config);
  CHECK_THROWS_AS(emit(second, config), OverwriteRefused);
  config.force = true;
  emit(second, config);

  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "epsilon,index,eigenvalue,parity_score,ipr");
  fs::remove(path);

  config.output_path.clear();
  CHECK_THROWS_AS(emit(first, config), InvalidArgument);
}

TEST_CASE("run_experiment attaches the config echo") {
  ExperimentConfig config = make_config(Experiment::ParityCensus,
                                        {{"dim", "3"}, {"trials", "5"}});
  config.seed = 11;
  const SweepResult r = run_experiment(config);
  REQUIRE(r.config_echo.has_value());
  CHECK(std::get<double>(r.config_echo->params.at("dim")) == 3.0);
  CHECK(r.config_echo->seed == 11);
  CHECK(r.experiment == "parity-census");
  CHECK(r.wall_seconds >= 0.0);
}
