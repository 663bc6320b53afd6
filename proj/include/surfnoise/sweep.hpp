#pragma once

// Grid sweeps over distance, wave number or frequency, and their CSV/JSON
// serialization.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "surfnoise/config.hpp"
#include "surfnoise/powerlaw.hpp"

namespace surfnoise {

/// Numeric cells are doubles; "NONCONVERGED" and "NA" (undefined slope) are text.
using Cell = std::variant<double, std::string>;

inline constexpr std::string_view nonconverged_marker = "NONCONVERGED";
inline constexpr std::string_view undefined_marker = "NA";

struct SeriesFit {
  double diffusion_number = 0.0;
  double start = 0.0;
  double stop = 0.0;
  PowerLawFit fit;
  std::string error;  ///< non-empty when the fit could not be made
};

struct SweepTable {
  std::string name;  ///< "<model>.<channel>"
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> warnings;
  std::vector<SeriesFit> fits;
  std::vector<std::string> columns;
  /// Rows grouped by D0 (ascending), each group ascending in the grid variable.
  std::vector<std::vector<Cell>> rows;
  bool nonconverged = false;

  /// Throws std::out_of_range for an unknown column.
  [[nodiscard]] std::size_t column_index(std::string_view column) const;
};

/// Computes every table of the configuration. The configuration must be valid.
std::vector<SweepTable> run_sweep(const RunConfig& config);

/// Power-law fit of a numeric column against the first (grid) column over the
/// inclusive row window. Throws std::domain_error on non-numeric or
/// non-positive cells.
PowerLawFit fit_power_law(const SweepTable& table, std::string_view column, std::size_t first,
                          std::size_t last);

std::string to_csv(const SweepTable& table);
std::string to_json(const SweepTable& table);

/// Output file for a table: the configured path when there is one table,
/// otherwise "<stem>.<model>.<channel><ext>" next to it.
std::string output_path(const std::string& configured, const SweepTable& table,
                        std::size_t table_count);

enum ExitStatus : int { exit_ok = 0, exit_error = 1, exit_config = 2, exit_nonconverged = 3 };

/// Validates, sweeps and writes the tables (to `out` when no output path is
/// configured). Returns exit_ok or exit_nonconverged; throws on errors.
int run(const RunConfig& config, std::ostream& out);

std::string_view library_version();

}  // namespace surfnoise
