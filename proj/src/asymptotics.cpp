#include "surfnoise/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace surfnoise {

std::string_view to_string(RegimeLabel label) {
  switch (label) {
    case RegimeLabel::SubSkin: return "sub_skin";
    case RegimeLabel::SkinToWavelength: return "skin_to_wavelength";
    case RegimeLabel::Crossover: return "crossover";
    case RegimeLabel::Radiative: return "radiative";
  }
  return "unknown";
}

Regime classify_regime(const DerivedScales& scales, double z0) {
  if (!(z0 > 0.0)) throw ParameterError("z0 must be positive");
  if (!(scales.skin_depth > 0.0) || !(scales.wavelength > 0.0))
    throw ParameterError("scales are not initialized");
  Regime r;
  r.z_over_delta = z0 / scales.skin_depth;
  r.z_over_lambda = z0 / scales.wavelength;
  const double d0 = scales.diffusion_number;
  r.z_over_diffusive = d0 > 0.0 ? r.z_over_delta / std::sqrt(d0)
                                : std::numeric_limits<double>::infinity();
  r.quartic_window = d0 > 1.0 && r.z_over_delta >= 1.0 && r.z_over_delta <= std::sqrt(d0);

  if (r.z_over_delta < 0.1)
    r.label = RegimeLabel::SubSkin;
  else if (r.z_over_delta >= 10.0 && r.z_over_lambda < 0.1)
    r.label = RegimeLabel::SkinToWavelength;
  else if (r.z_over_lambda < 0.1)
    r.label = RegimeLabel::Crossover;
  else
    r.label = RegimeLabel::Radiative;
  return r;
}

namespace {

void require_formula(const Regime& r) {
  if (r.label == RegimeLabel::SubSkin || r.label == RegimeLabel::SkinToWavelength) return;
  throw NoFormulaError("no asymptotic formula at z0/delta = " + std::to_string(r.z_over_delta) +
                       " (" + std::string(to_string(r.label)) + " regime)");
}

}  // namespace

AsymptoticValue asymptotic_alpha(Channel channel, ModelKind model, const DerivedScales& scales,
                                 double z0) {
  if (!is_electric(channel))
    throw std::invalid_argument("asymptotic_alpha takes alpha_zz or alpha_xx");
  AsymptoticValue out;
  out.regime = classify_regime(scales, z0);
  require_formula(out.regime);

  const double z = out.regime.z_over_delta;
  const double d0 = model == ModelKind::ChargeLayer ? scales.diffusion_number : 0.0;
  const bool zz = channel == Channel::AlphaZZ;

  // Scaled values, i.e. in units of (omega / 8 pi sigma) / delta^3.
  if (out.regime.label == RegimeLabel::SubSkin) {
    out.scaled = (zz ? 1.0 : 0.5) * (1.0 + d0) / (z * z * z);
  } else {
    const double correction = zz ? charge_layer_zz_far_coefficient * d0 / (z * z)
                                 : charge_layer_xx_far_coefficient * d0 / (z * z * z * z);
    out.scaled = (1.0 + correction) / (z * z);
  }
  const double delta = scales.skin_depth;
  out.raw = out.scaled * scales.omega / (8.0 * constants::pi * scales.conductivity) /
            (delta * delta * delta);
  return out;
}

MagneticAsymptotic asymptotic_magnetic(Channel channel, ModelKind model,
                                       const DerivedScales& scales, double z0) {
  if (channel != Channel::DeltaBXX)
    throw std::invalid_argument("asymptotic_magnetic takes delta_b_xx");
  if (model == ModelKind::ContinuousCharge)
    throw UndefinedQuantityError("delta B_xx is defined for the charge-layer model only");

  MagneticAsymptotic out;
  out.value.regime = classify_regime(scales, z0);
  require_formula(out.value.regime);
  out.local_baseline.regime = out.value.regime;

  const double c = constants::speed_of_light;
  const double delta = scales.skin_depth;
  const double ds = model == ModelKind::ChargeLayer
                        ? scales.diffusion_number * scales.omega * delta * delta
                        : 0.0;
  const double prefactor = ds / (c * scales.conductivity);
  const double to_scaled = c * delta * delta * delta;

  if (out.value.regime.label == RegimeLabel::SkinToWavelength) {
    out.value.raw = prefactor / (delta * std::pow(z0, 4));
    out.local_baseline.raw = delta / (c * std::pow(z0, 4));
  } else {
    out.value.raw = prefactor / (delta * delta * z0 * z0 * z0);
    out.local_baseline.raw = 1.0 / (c * z0 * delta * delta);
  }
  out.value.scaled = out.value.raw * to_scaled;
  out.local_baseline.scaled = out.local_baseline.raw * to_scaled;
  out.suppression_ratio = out.value.raw / out.local_baseline.raw;
  return out;
}

}  // namespace surfnoise
