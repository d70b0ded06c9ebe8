#include "pointerlab/emit.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pointerlab/errors.hpp"
#include "pointerlab/version.hpp"

namespace pointerlab {

std::string format_float17(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string format_cell(const Cell& cell) {
  if (const double* d = std::get_if<double>(&cell)) return format_float17(*d);
  return std::get<std::string>(cell);
}

std::string to_csv(const SweepResult& result) {
  std::ostringstream os;
  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    if (i) os << ',';
    os << result.columns[i];
  }
  os << '\n';
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << format_cell(row[i]);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::string json_escape(const std::string& s) {
  std::ostringstream os;
  for (char ch : s) {
    switch (ch) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      case '\r': os << "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          os << buf;
        } else {
          os << ch;
        }
    }
  }
  return os.str();
}

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";  // JSON has no inf/nan literals
  return format_float17(v);
}

std::string json_cell(const Cell& cell) {
  if (const double* d = std::get_if<double>(&cell)) return json_number(*d);
  return "\"" + json_escape(std::get<std::string>(cell)) + "\"";
}

std::string json_param(const ParamValue& value) {
  if (const double* d = std::get_if<double>(&value)) return json_number(*d);
  const auto& list = std::get<std::vector<double>>(value);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) os << ',';
    os << json_number(list[i]);
  }
  os << ']';
  return os.str();
}

std::string iso8601_now_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string to_json(const SweepResult& result, bool include_run) {
  std::ostringstream os;
  os << "{\n  \"metadata\": {\n";
  os << "    \"experiment\": \"" << json_escape(result.experiment) << "\",\n";
  os << "    \"version\": \"" << json_escape(kVersionString) << "\",\n";
  os << "    \"config\": {";
  if (result.config_echo.has_value()) {
    bool first = true;
    for (const auto& [key, value] : result.config_echo->params) {
      if (!first) os << ',';
      first = false;
      os << "\n      \"" << json_escape(key) << "\": " << json_param(value);
    }
    if (!first) os << ',';
    os << "\n      \"seed\": " << result.config_echo->seed;
    os << ",\n      \"format\": \""
       << (result.config_echo->format == OutputFormat::Csv ? "csv" : "json")
       << "\"\n    ";
  }
  os << "},\n";
  for (const auto& [key, value] : result.extras)
    os << "    \"" << json_escape(key) << "\": " << json_cell(value) << ",\n";
  os << "    \"checks\": [";
  for (std::size_t i = 0; i < result.checks.size(); ++i) {
    if (i) os << ',';
    os << "\n      {\"name\": \"" << json_escape(result.checks[i].name)
       << "\", \"passed\": " << (result.checks[i].passed ? "true" : "false")
       << ", \"detail\": \"" << json_escape(result.checks[i].detail) << "\"}";
  }
  os << (result.checks.empty() ? "]" : "\n    ]");
  if (include_run) {
    os << ",\n    \"run\": {\"timestamp\": \"" << iso8601_now_utc()
       << "\", \"wall_seconds\": " << json_number(result.wall_seconds) << "}";
  }
  os << "\n  },\n  \"rows\": [";
  for (std::size_t r = 0; r < result.rows.size(); ++r) {
    if (r) os << ',';
    os << "\n    {";
    const auto& row = result.rows[r];
    for (std::size_t i = 0; i < row.size() && i < result.columns.size(); ++i) {
      if (i) os << ", ";
      os << "\"" << json_escape(result.columns[i]) << "\": " << json_cell(row[i]);
    }
    os << "}";
  }
  os << (result.rows.empty() ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

void emit(const SweepResult& result, const ExperimentConfig& config) {
  if (config.output_path.empty())
    throw InvalidArgument("emit: output path is empty");
  const std::filesystem::path path(config.output_path);
  if (std::filesystem::exists(path) && !config.force)
    throw OverwriteRefused("emit: '" + config.output_path +
                           "' exists; pass --force to overwrite");
  std::error_code ec;
  const auto parent = path.parent_path();
  if (!parent.empty()) {
    std::filesystem::create_directories(parent, ec);
    if (ec) throw IoError("emit: cannot create directory '" + parent.string() + "'");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("emit: cannot open '" + config.output_path + "'");
  out << (config.format == OutputFormat::Csv ? to_csv(result) : to_json(result));
  out.flush();
  if (!out) throw IoError("emit: write to '" + config.output_path + "' failed");
}

}  // namespace pointerlab
