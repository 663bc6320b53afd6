#pragma once

// Dimensionless entry points for tests: skin depth normalized to 1 cm.

#include "surfnoise/response.hpp"
#include "surfnoise/scales.hpp"

namespace fixture {

using namespace surfnoise;

inline std::pair<MediumSpec, ProbeSpec> setup(ModelKind model, double w, double d0, double z,
                                              double bulk = 0.0) {
  DimensionlessSpec spec;
  spec.omega_delta_over_c = w;
  spec.diffusion_number = d0;
  spec.bulk_diffusion_number = bulk;
  spec.model = model;
  spec.grid = {z};
  return from_dimensionless(spec);
}

inline ResponseValue response(Channel channel, ModelKind model, double w, double d0, double z,
                              double bulk = 0.0, const QuadSpec& quad = {}) {
  const auto [m, p] = setup(model, w, d0, z, bulk);
  return compute_response(channel, m, p, quad);
}

inline DerivedScales scales(ModelKind model, double w, double d0, double bulk = 0.0) {
  const auto [m, p] = setup(model, w, d0, 1.0, bulk);
  return derive_scales(m, p);
}

/// D / (omega delta^2) giving the screening length a0 (in units of delta).
inline double bulk_for_screening(double a0, double w) { return 2.0 * a0 * a0 / (w * w); }

}  // namespace fixture
