#pragma once

// Material and probe parameters, unit conversion and the derived length
// scales (skin depth, screening length, diffusion number).
//
// All internal quantities are Gaussian-CGS. SI values are accepted only
// through MediumSpec::from_si.

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace surfnoise {

namespace constants {
inline constexpr double pi = 3.14159265358979323846;
/// Speed of light in cm/s.
inline constexpr double speed_of_light = 2.99792458e10;
/// 1/(4 pi eps0) in SI units; S/m -> 1/s.
inline constexpr double si_conductivity_to_gaussian = 8.9875517873681764e9;
/// m^2/s -> cm^2/s.
inline constexpr double si_diffusion_to_cgs = 1.0e4;
/// erg s
inline constexpr double hbar = 1.054571817e-27;
/// erg/K
inline constexpr double boltzmann = 1.380649e-16;
}  // namespace constants

enum class ModelKind { Local, ChargeLayer, ContinuousCharge };

std::string_view to_string(ModelKind kind);
/// Accepts "local", "charge_layer", "continuous_charge" (also "continuous").
std::optional<ModelKind> parse_model(std::string_view name);

/// Raised for inputs outside a quantity's physical domain (sigma <= 0, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a quantity is requested that the model does not define,
/// e.g. the bulk decay constant v1 when D = 0.
class UndefinedQuantityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct MediumSpec {
  double conductivity = 0.0;       ///< sigma, 1/s (Gaussian)
  double bulk_diffusion = 0.0;     ///< D, cm^2/s
  double surface_diffusion = 0.0;  ///< D_s, cm^2/s
  ModelKind model = ModelKind::Local;

  /// sigma in S/m, diffusion constants in m^2/s.
  static MediumSpec from_si(double conductivity_s_per_m, double bulk_diffusion_m2_s,
                            double surface_diffusion_m2_s, ModelKind model);

  /// Diffusion constants as seen by the model: the local model ignores both.
  [[nodiscard]] double effective_bulk_diffusion() const;
  [[nodiscard]] double effective_surface_diffusion() const;

  void validate() const;
};

struct ProbeSpec {
  double omega = 0.0;     ///< angular frequency, rad/s
  double distance = 0.0;  ///< z0, cm
  std::optional<double> temperature;  ///< K

  void validate() const;
};

struct DerivedScales {
  double skin_depth = 0.0;                ///< delta = c / sqrt(2 pi sigma omega)
  double wavelength = 0.0;                ///< lambda = 2 pi c / omega
  double screening_length = 0.0;          ///< a0 = sqrt(D / 4 pi sigma)
  double surface_screening_length = 0.0;  ///< sqrt(D_s / 4 pi sigma)
  double diffusion_number = 0.0;          ///< D0 = D_s / (omega delta^2)
  double bulk_diffusion_number = 0.0;     ///< D / (omega delta^2)
  double omega_delta_over_c = 0.0;
  std::complex<double> permittivity;      ///< eps(omega) = 1 + 4 pi i sigma / omega
  double conductivity = 0.0;
  double omega = 0.0;
  ModelKind model = ModelKind::Local;
};

DerivedScales derive_scales(const MediumSpec& medium, const ProbeSpec& probe);

/// Parameterization used by the figure presets: everything in units of the
/// skin depth.
struct DimensionlessSpec {
  double omega_delta_over_c = 0.0;
  double diffusion_number = 0.0;       ///< D0 (surface)
  double bulk_diffusion_number = 0.0;  ///< D / (omega delta^2)
  ModelKind model = ModelKind::Local;
  std::vector<double> grid;            ///< z0/delta or k delta, ascending

  void validate() const;
};

/// Physical medium/probe with delta normalized to 1 cm. The probe distance is
/// the first grid point (or 1 delta when the grid is empty).
std::pair<MediumSpec, ProbeSpec> from_dimensionless(const DimensionlessSpec& spec);

/// Regime assumptions of the diffusive model; violations are reported, not thrown.
std::vector<std::string> validity_report(const MediumSpec& medium, const ProbeSpec& probe);

}  // namespace surfnoise
