#pragma once

// Wave-vector resolved kernels: decay constants, effective permittivity of
// the charge layer, reflection coefficients and the bracketed integrand
// factors of the response integrals.
//
// Everything here is dimensionless: wave numbers in units of 1/delta, the
// vacuum wave number is omega*delta/c, diffusion enters through
// D0 = D_s/(omega delta^2) and D/(omega delta^2).

#include <complex>
#include <optional>

#include "surfnoise/scales.hpp"

namespace surfnoise {

using cplx = std::complex<double>;

struct KernelParams {
  ModelKind model = ModelKind::Local;
  double k_light = 0.0;           ///< omega*delta/c
  cplx permittivity{1.0, 0.0};    ///< eps(omega)
  double surface_diffusion = 0.0; ///< D0 = D_s/(omega delta^2)
  double bulk_diffusion = 0.0;    ///< D/(omega delta^2)

  /// Metal with eps = 1 + 2i/(omega delta/c)^2, i.e. delta is the skin depth.
  static KernelParams dimensionless(ModelKind model, double omega_delta_over_c,
                                    double diffusion_number, double bulk_diffusion_number = 0.0);
  static KernelParams from_scales(const DerivedScales& scales);
};

/// Principal square root forced onto the branch Re > 0; purely imaginary
/// results are put on Im < 0 (outgoing).
cplx decaying_sqrt(cplx z);

class WaveTriple {
 public:
  double k = 0.0;
  cplx v0;  ///< sqrt(k^2 - (omega/c)^2)
  cplx v;   ///< sqrt(k^2 - (omega/c)^2 eps)

  /// Bulk charge decay constant; throws UndefinedQuantityError when D = 0.
  [[nodiscard]] cplx v1() const;
  [[nodiscard]] bool has_v1() const { return v1_.has_value(); }

 private:
  std::optional<cplx> v1_;
  friend WaveTriple wave_triple(double k, const KernelParams& p);
};

WaveTriple wave_triple(double k, const KernelParams& p);

/// (eps + i D0 k^2) / (1 + i D0 k^2). Charge-layer (or local) media only.
cplx effective_permittivity(double k, const KernelParams& p);

/// Surface charge density induced by a normal interior field E_z^in.
cplx surface_charge(double k, const KernelParams& p, cplx ez_inside);

enum class Polarization { TMz, TMx, TE };

struct ReflectionValue {
  ModelKind model = ModelKind::Local;
  Polarization polarization = Polarization::TMz;
  double k = 0.0;
  cplx r;
};

/// E_z^r / E_z^i for the selected model.
ReflectionValue reflect_tm_z(double k, const KernelParams& p);
/// (v0 - v)/(v0 + v); no diffusion correction in any model.
ReflectionValue reflect_te(double k, const KernelParams& p);

/// Bracketed integrand factor of the x-polarized response (the 1/2 included,
/// the measure dk k e^{-2 v0 z0}/v0 excluded).
///
/// Local: (1/2)[v0^2 r_p + (omega/c)^2 r_TE]. The charge-layer and
/// continuous-charge brackets are evaluated as the local bracket plus their
/// exact difference from it; the difference has the common (v + v0) factor
/// cancelled analytically, which removes the catastrophic cancellation of the
/// raw two-term form at z0 >> delta.
cplx tm_x_kernel(double k, const KernelParams& p);

struct MagneticKernels {
  cplx bzz;    ///< (k^3/v0)(v0 - v)/(v0 + v), per unit c
  cplx dbxx;   ///< D_s induced change of the xx integrand, per unit c
};

/// Magnetic integrands including their 1/v0 factor. dbxx is zero for the
/// local model and undefined for the continuous-charge model.
MagneticKernels magnetic_kernels(double k, const KernelParams& p);

}  // namespace surfnoise
