#include "surfnoise/response.hpp"

#include <cmath>

namespace surfnoise {

std::string_view to_string(Channel channel) {
  switch (channel) {
    case Channel::AlphaZZ: return "alpha_zz";
    case Channel::AlphaXX: return "alpha_xx";
    case Channel::BZZ: return "b_zz";
    case Channel::DeltaBXX: return "delta_b_xx";
  }
  return "unknown";
}

std::optional<Channel> parse_channel(std::string_view name) {
  if (name == "alpha_zz") return Channel::AlphaZZ;
  if (name == "alpha_xx") return Channel::AlphaXX;
  if (name == "b_zz") return Channel::BZZ;
  if (name == "delta_b_xx") return Channel::DeltaBXX;
  return std::nullopt;
}

bool is_electric(Channel channel) {
  return channel == Channel::AlphaZZ || channel == Channel::AlphaXX;
}

Integrand response_integrand(Channel channel, const KernelParams& params) {
  switch (channel) {
    case Channel::AlphaZZ:
      return {[params](double k) { return (k * k * k) * reflect_tm_z(k, params).r; }, true};
    case Channel::AlphaXX:
      return {[params](double k) { return k * tm_x_kernel(k, params); }, true};
    case Channel::BZZ:
      return {[params](double k) { return (k * k * k) * reflect_te(k, params).r; }, true};
    case Channel::DeltaBXX:
      // The kernel is regular at the light line; no 1/v0 measure.
      return {[params](double k) { return magnetic_kernels(k, params).dbxx; }, false};
  }
  throw std::invalid_argument("unknown channel");
}

QuadResult response_integral(Channel channel, const KernelParams& params, double z_over_delta,
                             const QuadSpec& quad) {
  if (!(z_over_delta > 0.0)) throw ParameterError("z0/delta must be positive");
  if (channel == Channel::DeltaBXX && params.model == ModelKind::ContinuousCharge)
    throw UndefinedQuantityError("delta B_xx is defined for the charge-layer model only");
  if (params.model == ModelKind::ContinuousCharge && !(params.bulk_diffusion > 0.0))
    throw UndefinedQuantityError("continuous-charge model needs a positive bulk diffusion constant");
  if (channel == Channel::DeltaBXX && params.model == ModelKind::Local) {
    QuadResult zero;
    zero.subdivisions = 0;
    return zero;
  }
  const Integrand f = response_integrand(channel, params);
  return integrate_response(f, params.k_light, z_over_delta, quad);
}

ResponseValue compute_response(Channel channel, const MediumSpec& medium, const ProbeSpec& probe,
                               const QuadSpec& quad) {
  const DerivedScales s = derive_scales(medium, probe);
  const KernelParams params = KernelParams::from_scales(s);
  const double delta = s.skin_depth;
  const double z = probe.distance / delta;

  ResponseValue out;
  out.channel = channel;
  out.model = medium.model;
  out.distance = probe.distance;
  out.omega = probe.omega;
  out.distance_over_delta = z;
  out.quad = response_integral(channel, params, z, quad);

  const double delta3 = delta * delta * delta;
  if (is_electric(channel)) {
    out.value = out.quad.value / delta3;
    out.scaled = 8.0 * constants::pi * s.conductivity / s.omega * out.quad.value.imag();
  } else {
    out.value = out.quad.value / (constants::speed_of_light * delta3);
    out.scaled = out.quad.value.imag();
  }
  return out;
}

ResponseValue alpha_zz(const MediumSpec& medium, const ProbeSpec& probe, const QuadSpec& quad) {
  return compute_response(Channel::AlphaZZ, medium, probe, quad);
}

ResponseValue alpha_xx(const MediumSpec& medium, const ProbeSpec& probe, const QuadSpec& quad) {
  return compute_response(Channel::AlphaXX, medium, probe, quad);
}

ResponseValue b_zz(const MediumSpec& medium, const ProbeSpec& probe, const QuadSpec& quad) {
  return compute_response(Channel::BZZ, medium, probe, quad);
}

ResponseValue delta_b_xx(const MediumSpec& medium, const ProbeSpec& probe, const QuadSpec& quad) {
  return compute_response(Channel::DeltaBXX, medium, probe, quad);
}

double bose_factor(double omega, double temperature) {
  if (!(temperature > 0.0)) throw ParameterError("temperature must be positive");
  if (!(omega > 0.0)) throw ParameterError("angular frequency must be positive");
  const double x = constants::hbar * omega / (constants::boltzmann * temperature);
  return 2.0 / std::expm1(x);
}

NoiseResult fdt_noise(const ResponseValue& response, double temperature) {
  NoiseResult n;
  n.temperature = temperature;
  n.bose_factor = bose_factor(response.omega, temperature);
  n.occupation = 0.5 * n.bose_factor;
  const double im = response.value.imag();
  n.heating_factor = n.bose_factor * im;
  n.spectral_density = constants::hbar * n.bose_factor * im;
  n.spectral_density_classical = 2.0 * constants::boltzmann * temperature / response.omega * im;
  return n;
}

}  // namespace surfnoise
