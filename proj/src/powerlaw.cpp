#include "surfnoise/powerlaw.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace surfnoise {

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y, std::size_t first,
                          std::size_t last) {
  if (x.size() != y.size()) throw std::invalid_argument("x and y differ in length");
  if (last >= x.size() || first > last) throw std::invalid_argument("fit window out of range");
  const std::size_t n = last - first + 1;
  if (n < 3) throw std::invalid_argument("fit window needs at least 3 points");

  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[first + i];
    const double yi = y[first + i];
    if (!(xi > 0.0) || !(yi > 0.0))
      throw std::domain_error("non-positive value at row " + std::to_string(first + i));
    lx[i] = std::log(xi);
    ly[i] = std::log(yi);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw std::domain_error("fit window has no spread in x");
  PowerLawFit fit;
  fit.points = n;
  fit.exponent = sxy / sxx;
  const double intercept = my - fit.exponent * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - (intercept + fit.exponent * lx[i]);
    ssr += r * r;
  }
  fit.standard_error = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
  return fit;
}

std::vector<std::optional<double>> local_slopes(std::span<const double> x,
                                                std::span<const std::optional<double>> y) {
  if (x.size() != y.size()) throw std::invalid_argument("x and y differ in length");
  const std::size_t n = x.size();
  std::vector<std::optional<double>> out(n);
  if (n < 2) return out;
  auto slope = [&](std::size_t a, std::size_t b) -> std::optional<double> {
    if (!y[a] || !y[b]) return std::nullopt;
    const double ya = *y[a], yb = *y[b];
    if (ya == 0.0 || yb == 0.0 || (ya > 0.0) != (yb > 0.0)) return std::nullopt;
    if (!(x[a] > 0.0) || !(x[b] > 0.0) || x[a] == x[b]) return std::nullopt;
    return std::log(yb / ya) / std::log(x[b] / x[a]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = i == 0 ? 0 : i - 1;
    const std::size_t b = i + 1 == n ? i : i + 1;
    out[i] = slope(a, b);
  }
  return out;
}

}  // namespace surfnoise
