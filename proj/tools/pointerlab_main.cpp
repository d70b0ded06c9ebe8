// pointerlab: experiment runner for the pointer-state / eigenbasis toolkit.
// One subcommand per experiment; each accepts repeated --param key=value,
// --out/--format for emission, --seed, --force and --check. Exit codes:
// 0 success, 2 configuration error, 1 check failure or I/O failure.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pointerlab/emit.hpp"
#include "pointerlab/errors.hpp"
#include "pointerlab/experiments.hpp"
#include "pointerlab/version.hpp"

namespace {

struct SubcommandState {
  std::vector<std::string> raw_params;
  std::string out_path;
  std::string format = "csv";
  std::uint64_t seed = 1;
  bool force = false;
  bool check = false;
};

std::map<std::string, std::string> parse_key_values(
    const std::vector<std::string>& raw) {
  std::map<std::string, std::string> out;
  for (const std::string& item : raw) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw pointerlab::ConfigError("--param expects key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    if (out.count(key))
      throw pointerlab::ConfigError("parameter '" + key + "' given twice");
    out[key] = item.substr(eq + 1);
  }
  return out;
}

int run(pointerlab::Experiment experiment, const SubcommandState& state) {
  using namespace pointerlab;
  ExperimentConfig config;
  config.experiment = experiment;
  config.params = validate_params(experiment, parse_key_values(state.raw_params));
  config.seed = state.seed;
  config.output_path = state.out_path;
  config.force = state.force;
  config.check = state.check;
  if (state.format == "csv") {
    config.format = OutputFormat::Csv;
  } else if (state.format == "json") {
    config.format = OutputFormat::Json;
  } else {
    throw ConfigError("--format must be csv or json, got '" + state.format + "'");
  }

  const SweepResult result = run_experiment(config);

  if (config.output_path.empty()) {
    std::cout << (config.format == OutputFormat::Csv ? to_csv(result)
                                                     : to_json(result));
  } else {
    emit(result, config);
    std::cerr << experiment_name(experiment) << ": wrote " << result.rows.size()
              << " rows to " << config.output_path << "\n";
  }

  for (const auto& extra : result.extras)
    std::cerr << "  " << extra.first << " = " << format_cell(extra.second) << "\n";
  for (const auto& check : result.checks)
    std::cerr << "  [" << (check.passed ? "ok" : "FAIL") << "] " << check.name
              << (check.passed ? "" : ": " + check.detail) << "\n";

  if (config.check && !result.all_checks_passed()) {
    std::cerr << experiment_name(experiment) << ": built-in checks failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pointerlab: pointer-state decoherence and eigenbasis localization experiments"};
  app.set_version_flag("--version", pointerlab::kVersionString);
  app.require_subcommand(1);

  struct Entry {
    pointerlab::Experiment experiment;
    const char* description;
  };
  const std::vector<Entry> entries = {
      {pointerlab::Experiment::CirculantSpectrum,
       "Spectrum of the dephased constant density matrix vs. the DFT route"},
      {pointerlab::Experiment::FrameRank,
       "Effective rank of Gaussian-frame Gram matrices"},
      {pointerlab::Experiment::DoubleWellSweep,
       "Two-level record model localization sweep over well asymmetry"},
      {pointerlab::Experiment::NearSymmetrySweep,
       "Three-level record model parity sweep over symmetry breaking"},
      {pointerlab::Experiment::ParityCensus,
       "Parity counts of random reflection-symmetric matrices"},
      {pointerlab::Experiment::OracleCheck,
       "Closed-form vs numeric eigensystems of the three-level model"},
  };

  std::map<const CLI::App*, std::pair<pointerlab::Experiment, SubcommandState>> states;
  for (const Entry& entry : entries) {
    CLI::App* sub =
        app.add_subcommand(pointerlab::experiment_name(entry.experiment),
                           entry.description);
    auto& [experiment, state] = states[sub];
    experiment = entry.experiment;
    sub->add_option("--param", state.raw_params,
                    "Experiment parameter key=value (repeatable; lists comma-separated)");
    sub->add_option("--out", state.out_path, "Output file path (stdout if omitted)");
    sub->add_option("--format", state.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", state.seed, "Random seed (SplitMix64 stream)")
        ->envname("POINTERLAB_SEED");
    sub->add_flag("--force", state.force, "Overwrite an existing output file");
    sub->add_flag("--check", state.check,
                  "Fail (exit 1) unless every built-in assertion passes");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& [sub, pair] : states)
      if (sub->parsed()) return run(pair.first, pair.second);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const pointerlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const pointerlab::OverwriteRefused& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const pointerlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
