#pragma once

// Closed-form limits of the response functions and the distance-regime
// classifier. Values are returned both raw (Gaussian) and in the scaled
// convention of response.hpp.

#include <stdexcept>
#include <string_view>

#include "surfnoise/response.hpp"
#include "surfnoise/scales.hpp"

namespace surfnoise {

enum class RegimeLabel { SubSkin, SkinToWavelength, Crossover, Radiative };

std::string_view to_string(RegimeLabel label);

struct Regime {
  RegimeLabel label = RegimeLabel::Crossover;
  double z_over_delta = 0.0;
  double z_over_lambda = 0.0;
  double z_over_diffusive = 0.0;  ///< z0 / (delta sqrt(D0)); infinite when D0 = 0
  bool quartic_window = false;    ///< D0 > 1 and delta <= z0 <= delta sqrt(D0)
};

/// Thrown outside the sub-skin and skin-to-wavelength regimes.
class NoFormulaError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coefficient c of the far-zone xx correction (1 + c D0 (delta/z0)^4) of the
/// charge-layer model, obtained by quadrature of the correction integral
/// with eps_eff ~ eps/(1 + i D_s k^2/omega); see README.
inline constexpr double charge_layer_xx_far_coefficient = 15.0 / 8.0;
/// Coefficient of the far-zone zz correction (1 + c D0 (delta/z0)^2).
inline constexpr double charge_layer_zz_far_coefficient = 1.5;

Regime classify_regime(const DerivedScales& scales, double z0);

struct AsymptoticValue {
  double raw = 0.0;     ///< Im alpha (1/cm^3) or Im B (s/cm^4)
  double scaled = 0.0;
  Regime regime;
};

/// Electric channels only. Throws NoFormulaError in crossover/radiative
/// regimes and std::invalid_argument for magnetic channels.
AsymptoticValue asymptotic_alpha(Channel channel, ModelKind model, const DerivedScales& scales,
                                 double z0);

struct MagneticAsymptotic {
  AsymptoticValue value;           ///< Im delta B_xx
  AsymptoticValue local_baseline;  ///< quoted local B_xx for ratio reporting
  double suppression_ratio = 0.0;  ///< value / local_baseline
};

/// Channel delta_b_xx only (zero for the local model, undefined for the
/// continuous-charge model).
MagneticAsymptotic asymptotic_magnetic(Channel channel, ModelKind model,
                                       const DerivedScales& scales, double z0);

}  // namespace surfnoise
