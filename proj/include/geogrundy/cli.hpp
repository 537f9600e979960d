#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "geogrundy/coloring.hpp"
#include "geogrundy/geometry.hpp"

namespace geogrundy::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kCertified = 0;
inline constexpr int kCertificationFailed = 1;
inline constexpr int kUsageError = 2;

struct RunConfig {
  std::string command;  // gen | color | verify | bounds | oracle | render
  std::optional<int> n;
  std::optional<int> n_to;  // bounds: last n of the table
  std::uint64_t seed = 1;
  std::optional<std::string> criterion;
  std::optional<std::string> construction;
  bool convex = false;
  bool require_proper = false;
  std::optional<std::string> points_path;
  std::optional<std::string> coloring_path;
  std::optional<std::string> out_path;
  std::optional<std::string> report_path;
  std::optional<std::string> points_out_path;
  std::optional<int> only_class;
};

/// Thrown for invalid flag combinations and unreadable inputs (exit code 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Runs one subcommand. Primary output goes to `out` unless a path is
/// configured; diagnostics go to `err` as a one-line JSON object.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct ColorOutcome {
  PointSet points;
  EdgeColoring coloring;
  std::string coloring_json;
  std::string report_json;
  bool certified = false;
};

/// construction + completion + verification for `color`.
ColorOutcome color(const RunConfig& config);

/// CSV: n,criterion,setting,lower,upper,achieved.
std::string bounds_csv(int n_from, int n_to, std::uint64_t seed);

/// JSON with exact indices of small convex (or given) instances.
std::string oracle_json(const PointSet& s, std::optional<Criterion> only);

/// Points as disks, edges stroked by colour class (golden-angle hues).
std::string render_svg(const PointSet& s, const EdgeColoring& col, std::optional<int> only_class = std::nullopt);

}  // namespace geogrundy::cli
