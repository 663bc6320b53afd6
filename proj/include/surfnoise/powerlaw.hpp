#pragma once

// Log-log power-law fits and pointwise local slopes.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace surfnoise {

struct PowerLawFit {
  double exponent = 0.0;
  double standard_error = 0.0;
  std::size_t points = 0;
};

/// Least-squares slope of ln y against ln x over the inclusive index window
/// [first, last]. Needs at least 3 points; throws std::domain_error on
/// non-positive values.
PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y, std::size_t first,
                          std::size_t last);

/// d ln|y| / d ln x by centered differences (one-sided at the ends). Empty
/// where a neighbour is missing, zero, or of the opposite sign.
std::vector<std::optional<double>> local_slopes(std::span<const double> x,
                                                std::span<const std::optional<double>> y);

}  // namespace surfnoise
