// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "conedepth/depth.hpp"
#include "conedepth/geometry.hpp"
#include "conedepth/quantile.hpp"
#include "conedepth/sweep.hpp"

namespace conedepth::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kData = 2,
  kDegenerateCone = 3,
  kUnsupportedCone = 4,
  kInternal = 5,
};

enum class OutputFormat { json, csv, svg };

struct RunConfig {
  std::string command;
  std::filesystem::path input;
  ConeV cone = ConeV::orthant();
  std::vector<double> p_levels;
  std::optional<Point2> z;
  /// xmin, xmax, ymin, ymax
  std::optional<std::array<double, 4>> bounds;
  std::size_t nx = 50;
  std::size_t ny = 50;
  Tolerance tol;
  std::optional<std::filesystem::path> output;
  std::optional<OutputFormat> format;
};

/// Two comma-separated numbers per row; a leading non-numeric row is a
/// header. Blank lines are ignored.
DataSet parse_csv(const std::filesystem::path& path);
DataSet parse_csv_text(std::string_view text);

/// "orthant" or "b1x,b1y;b2x,b2y". Throws std::invalid_argument on bad
/// syntax; the cone itself is validated when used.
ConeV parse_cone(std::string_view spec);

/// "x,y"
Point2 parse_point(std::string_view spec);

/// Shortest representation that reads back to the same double.
std::string format_number(double v);

nlohmann::json polyhedron_json(const Polyhedron2& poly);
nlohmann::json quantile_json(const QuantileResult& result, std::size_t steps);

nlohmann::json cmd_quantile(const RunConfig& cfg, const DataSet& X);
nlohmann::json cmd_cdf(const RunConfig& cfg, const DataSet& X);
nlohmann::json cmd_depth(const RunConfig& cfg, const DataSet& X);
nlohmann::json cmd_tukey_depth(const RunConfig& cfg, const DataSet& X);
nlohmann::json cmd_tukey_region(const RunConfig& cfg, const DataSet& X);

struct GridRow {
  double x;
  double y;
  double F;
};
std::vector<GridRow> cmd_grid(const RunConfig& cfg, const DataSet& X);
std::string cmd_plot(const RunConfig& cfg, const DataSet& X);

/// Output text of a configured command (reads `cfg.input`).
std::string execute(const RunConfig& cfg);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conedepth::cli
