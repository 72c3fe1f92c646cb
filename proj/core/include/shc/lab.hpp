#pragma once

#include "shc/fit.hpp"
#include "shc/subordinator.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shc::lab {

enum class Experiment {
  large_time,
  subordinate_rate,
  small_time_mc,
  transform_consistency,
  moment_laws,
  tail_probe,
};

struct ExperimentInfo {
  Experiment kind;
  std::string_view name;
  std::string_view description;
};

std::span<const ExperimentInfo> experiments() noexcept;
std::string_view to_string(Experiment e) noexcept;

/// A parsed and validated run configuration.
///
/// The source form is a flat key=value file. Blank lines and lines starting
/// with '#' are ignored; anything after a '#' on a value line is a comment.
/// Every key must be one of the recognised keys listed in config_keys().
/// Command-line overrides are applied on top of the file before validation.
struct Config {
  Experiment experiment = Experiment::large_time;
  std::uint64_t seed = 0;
  std::string output;

  double alpha = 2.0;
  std::string time_change = "inverse";
  std::string phi = "stable";
  double phi_beta = 0.5;
  double phi_kappa = 1.0;
  double phi_a = 0.3;
  double phi_b = 0.9;

  double domain_a = 0.0;
  double domain_b = 1.0;
  std::size_t truncation = 1000;
  std::optional<std::string> eigen_table;

  std::vector<double> t_grid;

  long n_paths = 10'000;
  double dt = 1e-3;
  std::optional<long> n_steps;
  double path_delta_u = 1e-4;
  unsigned workers = 1;

  double tolerance = 1e-12;
  double transform_a = 1.0;
  std::string moment_kind = "xlog";
  double moment_p = 1.0;
  std::vector<double> tail_deltas{0.5, 1.0, 2.0};
  long tail_samples = 100'000;

  /// Effective key=value pairs after overrides, in key order. Echoed into
  /// the JSON sidecar.
  std::map<std::string, std::string> entries;

  LaplaceExponent exponent() const;
};

/// Recognised keys with a one-line description each.
std::span<const std::pair<std::string_view, std::string_view>> config_keys() noexcept;

/// Splits "key=value" into its parts. Throws ValidationError when '=' is
/// missing or the key is empty.
std::pair<std::string, std::string> split_assignment(std::string_view text);

/// Parses and validates. Throws ValidationError on unknown keys, malformed
/// values, an empty t grid, a missing seed or non-positive tolerances.
Config parse_config(std::istream& in,
                    std::span<const std::string> overrides = {});
Config load_config(const std::filesystem::path& path,
                   std::span<const std::string> overrides = {});

struct Row {
  double t = 0.0;
  double computed = 0.0;
  double reference = 0.0;
  /// computed / reference, or NaN when reference is zero.
  double ratio = 0.0;
  double error_bound = 0.0;
  std::string method;
};

struct Summary {
  std::optional<LogLogFit> fit;
  /// Slope the fit is expected to approach, when the experiment has one.
  std::optional<double> expected_slope;
  /// Experiment-specific scalar results (e.g. max_abs_error).
  std::map<std::string, double> metrics;
};

struct ExperimentResult {
  Config config;
  std::vector<Row> rows;
  Summary summary;
  double wall_seconds = 0.0;
};

/// Runs one experiment. Rows are ordered by t. Module errors are rethrown
/// with the same type and the failing t prepended to the message.
ExperimentResult run_experiment(const Config& config);

/// CSV with header t,computed,reference,ratio,error_bound,method. Numbers
/// are written with 17 significant digits so reruns compare bit-exactly.
void write_csv(std::ostream& out, const ExperimentResult& result);

/// JSON sidecar: config echo, rows, summary and wall-clock time.
void write_json(std::ostream& out, const ExperimentResult& result);

/// Writes <stem>.csv and <stem>.json into dir, creating it if needed. The
/// stem is config.output, or the experiment name when that is empty.
/// Returns the CSV path.
std::filesystem::path write_outputs(const ExperimentResult& result,
                                    const std::filesystem::path& dir);

}  // namespace shc::lab
