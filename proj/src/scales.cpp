#include "surfnoise/scales.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace surfnoise {

namespace {
constexpr double c_light = constants::speed_of_light;
constexpr double pi = constants::pi;

std::string format_ratio(std::string_view what, double value, double threshold) {
  std::ostringstream os;
  os.precision(3);
  os << what << " = " << value << " >= " << threshold;
  return os.str();
}
}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Local: return "local";
    case ModelKind::ChargeLayer: return "charge_layer";
    case ModelKind::ContinuousCharge: return "continuous_charge";
  }
  return "unknown";
}

std::optional<ModelKind> parse_model(std::string_view name) {
  if (name == "local") return ModelKind::Local;
  if (name == "charge_layer") return ModelKind::ChargeLayer;
  if (name == "continuous_charge" || name == "continuous") return ModelKind::ContinuousCharge;
  return std::nullopt;
}

MediumSpec MediumSpec::from_si(double conductivity_s_per_m, double bulk_diffusion_m2_s,
                               double surface_diffusion_m2_s, ModelKind model) {
  MediumSpec m;
  m.conductivity = conductivity_s_per_m * constants::si_conductivity_to_gaussian;
  m.bulk_diffusion = bulk_diffusion_m2_s * constants::si_diffusion_to_cgs;
  m.surface_diffusion = surface_diffusion_m2_s * constants::si_diffusion_to_cgs;
  m.model = model;
  m.validate();
  return m;
}

double MediumSpec::effective_bulk_diffusion() const {
  return model == ModelKind::Local ? 0.0 : bulk_diffusion;
}

double MediumSpec::effective_surface_diffusion() const {
  return model == ModelKind::Local ? 0.0 : surface_diffusion;
}

void MediumSpec::validate() const {
  if (!(conductivity > 0.0) || !std::isfinite(conductivity))
    throw ParameterError("conductivity must be positive and finite");
  if (!(bulk_diffusion >= 0.0) || !std::isfinite(bulk_diffusion))
    throw ParameterError("bulk diffusion constant must be non-negative");
  if (!(surface_diffusion >= 0.0) || !std::isfinite(surface_diffusion))
    throw ParameterError("surface diffusion constant must be non-negative");
}

void ProbeSpec::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw ParameterError("angular frequency must be positive and finite");
  if (!(distance > 0.0) || !std::isfinite(distance))
    throw ParameterError("observation distance must be positive and finite");
  if (temperature && !(*temperature > 0.0))
    throw ParameterError("temperature must be positive");
}

DerivedScales derive_scales(const MediumSpec& medium, const ProbeSpec& probe) {
  medium.validate();
  probe.validate();
  const double sigma = medium.conductivity;
  const double omega = probe.omega;
  const double d = medium.effective_bulk_diffusion();
  const double ds = medium.effective_surface_diffusion();

  DerivedScales s;
  s.conductivity = sigma;
  s.omega = omega;
  s.model = medium.model;
  s.skin_depth = c_light / std::sqrt(2.0 * pi * sigma * omega);
  s.wavelength = 2.0 * pi * c_light / omega;
  s.screening_length = std::sqrt(d / (4.0 * pi * sigma));
  s.surface_screening_length = std::sqrt(ds / (4.0 * pi * sigma));
  s.diffusion_number = ds / (omega * s.skin_depth * s.skin_depth);
  s.bulk_diffusion_number = d / (omega * s.skin_depth * s.skin_depth);
  s.omega_delta_over_c = omega * s.skin_depth / c_light;
  s.permittivity = {1.0, 4.0 * pi * sigma / omega};
  return s;
}

void DimensionlessSpec::validate() const {
  if (!(omega_delta_over_c > 0.0) || !std::isfinite(omega_delta_over_c))
    throw ParameterError("omega*delta/c must be positive");
  if (!(diffusion_number >= 0.0)) throw ParameterError("D0 must be non-negative");
  if (!(bulk_diffusion_number >= 0.0)) throw ParameterError("bulk D0 must be non-negative");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw ParameterError("grid values must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw ParameterError("grid must be strictly ascending");
  }
}

std::pair<MediumSpec, ProbeSpec> from_dimensionless(const DimensionlessSpec& spec) {
  spec.validate();
  constexpr double delta = 1.0;  // cm
  const double omega = spec.omega_delta_over_c * c_light / delta;

  MediumSpec medium;
  medium.model = spec.model;
  medium.conductivity = c_light * c_light / (2.0 * pi * omega * delta * delta);
  medium.surface_diffusion = spec.diffusion_number * omega * delta * delta;
  medium.bulk_diffusion = spec.bulk_diffusion_number * omega * delta * delta;

  ProbeSpec probe;
  probe.omega = omega;
  probe.distance = spec.grid.empty() ? delta : spec.grid.front() * delta;
  return {medium, probe};
}

std::vector<std::string> validity_report(const MediumSpec& medium, const ProbeSpec& probe) {
  const DerivedScales s = derive_scales(medium, probe);
  const double c2 = c_light * c_light;
  std::vector<std::string> warnings;

  const double a0_ratio = std::max(s.screening_length, s.surface_screening_length) / probe.distance;
  if (a0_ratio >= 0.1)
    warnings.push_back(format_ratio("screening length a0/z0", a0_ratio, 0.1));
  const double z_lambda = probe.distance / s.wavelength;
  if (z_lambda >= 0.1)
    warnings.push_back(format_ratio("retardation z0/lambda", z_lambda, 0.1));
  const double bulk = medium.effective_bulk_diffusion() * probe.omega / c2;
  if (bulk >= 0.01)
    warnings.push_back(format_ratio("bulk diffusion correction D*omega/c^2", bulk, 0.01));
  const double surface = medium.effective_surface_diffusion() * probe.omega / c2;
  if (surface >= 0.01)
    warnings.push_back(format_ratio("surface diffusion correction D_s*omega/c^2", surface, 0.01));
  return warnings;
}

}  // namespace surfnoise
