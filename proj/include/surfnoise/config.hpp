#pragma once

// Run configuration: a flat "key = value" text format with [section]
// headers. Keys are addressed as "section.key"; command-line overrides use
// the same names and win over the file.
//
//   [run]          mode, models, channels, figure, format, output, jobs
//   [grid]         variable, start, stop, count
//   [dimensionless] omega_delta_over_c, D0, bulk_diffusion_number
//   [physical]     conductivity_si, bulk_diffusion_si, surface_diffusion_si,
//                  omega, distance, temperature
//   [quadrature]   rel_tol, abs_floor, max_subdivisions, tail_multiplier
//   [fit]          start, stop

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surfnoise/quadrature.hpp"
#include "surfnoise/response.hpp"
#include "surfnoise/scales.hpp"

namespace surfnoise {

class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  [[nodiscard]] const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class RunMode { Dimensionless, Physical };
/// z0_over_delta and k_delta are dimensionless; z0 (cm) and omega (rad/s) physical.
enum class GridVariable { DistanceOverDelta, WaveNumberDelta, Distance, Omega };
enum class FigurePreset { None, Fig1, Fig2 };
enum class OutputFormat { Csv, Json };

std::string_view to_string(RunMode mode);
std::string_view to_string(GridVariable variable);
std::string_view to_string(FigurePreset preset);
std::string_view to_string(OutputFormat format);

struct GridSpec {
  GridVariable variable = GridVariable::DistanceOverDelta;
  double start = 1e-2;
  double stop = 1e2;
  int count = 41;

  /// Log-spaced points; the end points are exact.
  [[nodiscard]] std::vector<double> values() const;
};

struct PhysicalParams {
  double conductivity_si = 0.0;       ///< S/m
  double bulk_diffusion_si = 0.0;     ///< m^2/s
  double surface_diffusion_si = 0.0;  ///< m^2/s
  double omega = 0.0;                 ///< rad/s, fixed for distance grids
  double distance = 0.0;              ///< cm, fixed for omega grids
};

struct RunConfig {
  RunMode mode = RunMode::Dimensionless;
  std::vector<ModelKind> models{ModelKind::Local};
  std::vector<Channel> channels{Channel::AlphaZZ};
  GridSpec grid;
  std::vector<double> diffusion_numbers{0.0};  ///< D0 list
  double omega_delta_over_c = 1e-6;
  /// D / (omega delta^2) for the continuous-charge model; unset means D = D_s.
  std::optional<double> bulk_diffusion_number;
  PhysicalParams physical;
  std::optional<double> temperature;
  OutputFormat format = OutputFormat::Csv;
  std::string output;  ///< empty: standard output
  QuadSpec quad;
  FigurePreset figure = FigurePreset::None;
  std::optional<std::pair<double, double>> fit;
  int jobs = 0;  ///< 0: hardware concurrency

  /// Throws ConfigError naming the offending field.
  void validate() const;
  /// Fully resolved configuration as ordered "section.key" / value pairs.
  [[nodiscard]] std::vector<std::pair<std::string, std::string>> resolved() const;
};

using ConfigEntries = std::map<std::string, std::string>;

/// Parses the text format into "section.key" entries. Throws ConfigError on
/// malformed lines and unknown keys.
ConfigEntries parse_config_text(std::string_view text);
ConfigEntries read_config_file(const std::string& path);

/// Defaults, then the figure preset (if any), then every explicit entry.
RunConfig build_config(const ConfigEntries& entries);

/// Applies the named figure preset to a configuration.
void apply_preset(RunConfig& config, FigurePreset preset);

/// 17 significant digits ("%.17g"); round-trips every double.
std::string format_number(double value);

}  // namespace surfnoise
