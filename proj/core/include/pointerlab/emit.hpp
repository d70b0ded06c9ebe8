#pragma once

#include <string>

#include "pointerlab/experiments.hpp"

namespace pointerlab {

/// Floats formatted with 17 significant digits ("%.17g"): lossless round-trip
/// and byte-identical across runs. Integral values print without a decimal
/// point; non-finite values print as inf/-inf/nan tokens.
std::string format_float17(double value);

/// One cell: numeric via format_float17, string tokens verbatim. Tokens never
/// require quoting (no commas, quotes or control characters are emitted).
std::string format_cell(const Cell& cell);

/// Header row plus data rows, comma-separated, LF line endings. CSV carries
/// no metadata block, so its bytes depend only on (config, seed).
std::string to_csv(const SweepResult& result);

/// Full JSON document: {"metadata": {...}, "rows": [...]}. The metadata block
/// holds the experiment name, config echo, tool version, built-in check
/// outcomes, and experiment extras; non-deterministic run information
/// (ISO-8601 timestamp, wall time) is isolated under metadata.run so
/// determinism checks can drop that one subobject. Pass include_run = false
/// to omit it entirely. Non-finite numbers serialize as null.
std::string to_json(const SweepResult& result, bool include_run = true);

/// Writes the result to config.output_path in config.format. Refuses to
/// overwrite an existing file unless config.force (OverwriteRefused); other
/// filesystem failures raise IoError.
void emit(const SweepResult& result, const ExperimentConfig& config);

}  // namespace pointerlab
