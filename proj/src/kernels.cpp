#include "surfnoise/kernels.hpp"

#include <cmath>

namespace surfnoise {

namespace {
constexpr cplx I{0.0, 1.0};

// i D_s k^2 / omega in dimensionless form.
cplx diffusion_term(double k, const KernelParams& p) {
  return {0.0, p.surface_diffusion * k * k};
}

// (eps - 1) k^2 / v1, the bulk-charge term of the continuous model.
cplx bulk_charge_term(const WaveTriple& w, const KernelParams& p) {
  return (p.permittivity - 1.0) * (w.k * w.k) / w.v1();
}
}  // namespace

KernelParams KernelParams::dimensionless(ModelKind model, double omega_delta_over_c,
                                         double diffusion_number, double bulk_diffusion_number) {
  if (!(omega_delta_over_c > 0.0)) throw ParameterError("omega*delta/c must be positive");
  if (!(diffusion_number >= 0.0) || !(bulk_diffusion_number >= 0.0))
    throw ParameterError("diffusion numbers must be non-negative");
  KernelParams p;
  p.model = model;
  p.k_light = omega_delta_over_c;
  p.permittivity = {1.0, 2.0 / (omega_delta_over_c * omega_delta_over_c)};
  if (model != ModelKind::Local) {
    p.surface_diffusion = diffusion_number;
    p.bulk_diffusion = bulk_diffusion_number;
  }
  return p;
}

KernelParams KernelParams::from_scales(const DerivedScales& s) {
  KernelParams p;
  p.model = s.model;
  p.k_light = s.omega_delta_over_c;
  p.permittivity = s.permittivity;
  if (s.model != ModelKind::Local) {
    p.surface_diffusion = s.diffusion_number;
    p.bulk_diffusion = s.bulk_diffusion_number;
  }
  return p;
}

cplx decaying_sqrt(cplx z) {
  cplx r = std::sqrt(z);
  if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() > 0.0)) r = -r;
  return r;
}

cplx WaveTriple::v1() const {
  if (!v1_) throw UndefinedQuantityError("v1 is undefined without bulk diffusion (D = 0)");
  return *v1_;
}

WaveTriple wave_triple(double k, const KernelParams& p) {
  if (!(k >= 0.0) || !std::isfinite(k)) throw ParameterError("wave number must be >= 0");
  const double kl = p.k_light;
  WaveTriple w;
  w.k = k;
  // (k - kl)(k + kl) keeps v0 accurate next to the light line.
  w.v0 = decaying_sqrt(cplx{(k - kl) * (k + kl), 0.0});
  // A vacuum half-space must reflect nothing, bit for bit.
  w.v = p.permittivity == cplx{1.0, 0.0} ? w.v0 : decaying_sqrt(k * k - kl * kl * p.permittivity);
  if (p.bulk_diffusion > 0.0) {
    // v1^2 = (4 pi sigma - i omega)/D + k^2 = -i eps omega / D + k^2
    w.v1_ = decaying_sqrt(-I * p.permittivity / p.bulk_diffusion + k * k);
  }
  return w;
}

cplx effective_permittivity(double k, const KernelParams& p) {
  if (p.model == ModelKind::ContinuousCharge)
    throw UndefinedQuantityError("effective permittivity is defined for the charge-layer model");
  const cplx d = diffusion_term(k, p);
  return (p.permittivity + d) / (1.0 + d);
}

cplx surface_charge(double k, const KernelParams& p, cplx ez_inside) {
  if (p.model == ModelKind::ContinuousCharge)
    throw UndefinedQuantityError("surface charge is defined for the charge-layer model");
  const cplx d = diffusion_term(k, p);
  return (p.permittivity - 1.0) / (4.0 * constants::pi) / (1.0 + d) * ez_inside;
}

ReflectionValue reflect_tm_z(double k, const KernelParams& p) {
  const WaveTriple w = wave_triple(k, p);
  ReflectionValue out{p.model, Polarization::TMz, k, {}};
  // r = (A v0 - B)/(A v0 + B) written as 1 - 2B/(A v0 + B) so that Im r
  // keeps full relative precision when |eps| is huge.
  cplx a = p.permittivity;
  cplx b = w.v;
  if (p.model == ModelKind::ChargeLayer) a = effective_permittivity(k, p);
  if (p.model == ModelKind::ContinuousCharge) b += bulk_charge_term(w, p);
  const cplx den = a * w.v0 + b;
  // Only eps = 1 exactly at the light line makes both vanish; the limit is 0.
  out.r = den == cplx{} ? cplx{} : 1.0 - 2.0 * b / den;
  return out;
}

ReflectionValue reflect_te(double k, const KernelParams& p) {
  const WaveTriple w = wave_triple(k, p);
  ReflectionValue out{p.model, Polarization::TE, k, {}};
  const cplx den = w.v0 + w.v;
  out.r = den == cplx{} ? cplx{} : 2.0 * w.v0 / den - 1.0;
  return out;
}

cplx tm_x_kernel(double k, const KernelParams& p) {
  const WaveTriple w = wave_triple(k, p);
  const cplx eps = p.permittivity;
  const cplx v0 = w.v0;
  const cplx v = w.v;
  const double kl2 = p.k_light * p.k_light;

  const cplx r_p = 1.0 - 2.0 * v / (eps * v0 + v);
  const cplx r_te = 2.0 * v0 / (v0 + v) - 1.0;
  const cplx local = 0.5 * (v0 * v0 * r_p + kl2 * r_te);

  switch (p.model) {
    case ModelKind::Local:
      return local;
    case ModelKind::ChargeLayer: {
      // -i D k^2 v0^2 (eps - 1) / ((eps v0 + v)((eps + iD) v0 + (1 + iD) v))
      const cplx d = diffusion_term(k, p);
      if (d == cplx{}) return local;
      const cplx num = -d * (k * k) * v0 * v0 * (eps - 1.0);
      const cplx den = (eps * v0 + v) * ((eps + d) * v0 + (1.0 + d) * v);
      return local + num / den;
    }
    case ModelKind::ContinuousCharge: {
      // -k^2 v0^2 (eps - 1) eps v0 / (v1 (eps v0 + v + X)(eps v0 + v))
      const cplx x = bulk_charge_term(w, p);
      const cplx num = -(k * k) * v0 * v0 * (eps - 1.0) * eps * v0;
      const cplx den = w.v1() * (eps * v0 + v + x) * (eps * v0 + v);
      return local + num / den;
    }
  }
  return local;
}

MagneticKernels magnetic_kernels(double k, const KernelParams& p) {
  const WaveTriple w = wave_triple(k, p);
  const cplx eps = p.permittivity;
  const cplx v0 = w.v0;
  const cplx v = w.v;

  MagneticKernels out;
  const cplx r_te = 2.0 * v0 / (v0 + v) - 1.0;
  out.bzz = (k * k * k) * r_te / v0;

  switch (p.model) {
    case ModelKind::Local:
      out.dbxx = 0.0;
      break;
    case ModelKind::ChargeLayer: {
      // Exact D_s-difference of the reflected B_x integrand; the 1/v0 of the
      // measure cancels against the v0 of the difference.
      const cplx d = diffusion_term(k, p);
      const double kl2 = p.k_light * p.k_light;
      const cplx num = d * (k * k * k) * kl2 * (eps - 1.0) * (eps - 1.0);
      const cplx den = (v + v0) * ((eps + d) * v0 + (1.0 + d) * v) * (eps * v0 + v);
      out.dbxx = num / den;
      break;
    }
    case ModelKind::ContinuousCharge:
      throw UndefinedQuantityError("delta B_xx is defined for the charge-layer model only");
  }
  return out;
}

}  // namespace surfnoise
