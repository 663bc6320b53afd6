#pragma once

// Response functions of the surface at the dipole position and their
// conversion to thermal noise through the fluctuation-dissipation theorem.
//
// Electric responses are reported per unit dipole, alpha in 1/cm^3
// (Gaussian). Magnetic responses follow the same convention with the
// explicit 1/c of the magnetic integrals, i.e. in s/cm^4.
//
// Scaled values: (8 pi sigma / omega) delta^3 Im alpha for the electric
// channels, so the local short-distance law reads (delta/z0)^3, and
// c delta^3 Im B for the magnetic channels.

#include <optional>
#include <string_view>

#include "surfnoise/kernels.hpp"
#include "surfnoise/quadrature.hpp"
#include "surfnoise/scales.hpp"

namespace surfnoise {

enum class Channel { AlphaZZ, AlphaXX, BZZ, DeltaBXX };

std::string_view to_string(Channel channel);
std::optional<Channel> parse_channel(std::string_view name);
bool is_electric(Channel channel);

struct ResponseValue {
  Channel channel = Channel::AlphaZZ;
  ModelKind model = ModelKind::Local;
  double distance = 0.0;  ///< z0, cm
  double omega = 0.0;
  double distance_over_delta = 0.0;
  cplx value;             ///< raw Gaussian value
  double scaled = 0.0;    ///< see header comment
  QuadResult quad;
};

/// Dimensionless response integral at z0/delta for the given kernel set:
/// int dk g(k) e^{-2 v0 z0}/v0 in units of 1/delta^3. This is the value whose
/// imaginary part, times 4/(omega delta/c)^2, gives the scaled electric response.
QuadResult response_integral(Channel channel, const KernelParams& params, double z_over_delta,
                             const QuadSpec& quad = {});

/// Integrand numerator g(k) of the selected channel (k in 1/delta).
Integrand response_integrand(Channel channel, const KernelParams& params);

ResponseValue compute_response(Channel channel, const MediumSpec& medium, const ProbeSpec& probe,
                               const QuadSpec& quad = {});

ResponseValue alpha_zz(const MediumSpec& medium, const ProbeSpec& probe, const QuadSpec& quad = {});
ResponseValue alpha_xx(const MediumSpec& medium, const ProbeSpec& probe, const QuadSpec& quad = {});
ResponseValue b_zz(const MediumSpec& medium, const ProbeSpec& probe, const QuadSpec& quad = {});
/// Charge-layer model (zero for the local model).
ResponseValue delta_b_xx(const MediumSpec& medium, const ProbeSpec& probe,
                         const QuadSpec& quad = {});

struct NoiseResult {
  double temperature = 0.0;
  double occupation = 0.0;        ///< nbar = 1/(exp(hbar omega / kT) - 1)
  double bose_factor = 0.0;       ///< 2 nbar
  double heating_factor = 0.0;    ///< Gamma hbar^2 / a^2 = 2 nbar Im alpha
  double spectral_density = 0.0;  ///< 2 hbar nbar Im alpha
  double spectral_density_classical = 0.0;  ///< (2 kT / omega) Im alpha
};

/// 2 / (exp(hbar omega / kT) - 1)
double bose_factor(double omega, double temperature);

/// Absorption-channel thermal noise of a response. The spontaneous-emission
/// (T = 0) part is not included.
NoiseResult fdt_noise(const ResponseValue& response, double temperature);

}  // namespace surfnoise
