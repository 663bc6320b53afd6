#pragma once

// Semi-infinite response integrals
//
//     I = int_0^inf dk g(k) e^{-2 v0(k) z0} [/ v0(k)]
//
// with v0 = sqrt(k^2 - k_light^2) on the outgoing branch. The optional 1/v0
// factor has an integrable inverse-square-root singularity at k = k_light.
//
// The domain is split at k_light. The propagating part [0, k_light] uses
// k = k_light sin(theta), the evanescent part uses k = k_light cosh(t) when
// the 1/v0 factor is present; both substitutions make dk/v0 regular. Each
// segment is integrated by globally adaptive 7/15-point Gauss-Kronrod
// bisection. Beyond k_max the integrand is bounded by its exponential
// envelope and the bound is added to the error estimate.

#include <complex>
#include <cstddef>
#include <functional>

namespace surfnoise {

using cplx = std::complex<double>;

struct QuadSpec {
  double rel_tol = 1e-9;
  double abs_floor = 1e-30;
  int max_subdivisions = 2000;
  double tail_multiplier = 40.0;  ///< k_max = max(kappa / z0, 10 k_light)

  void validate() const;
};

struct QuadResult {
  cplx value;
  double abs_error_real = 0.0;
  double abs_error_imag = 0.0;
  double rel_error = 0.0;      ///< max over real/imag parts
  double rel_error_imag = 0.0;
  int subdivisions = 0;
  bool singular_segment = false;  ///< propagating segment was integrated
  bool tail_significant = false;  ///< tail bound exceeds 10% of the error budget
  bool converged = true;
};

struct Integrand {
  std::function<cplx(double)> numerator;  ///< g(k)
  bool over_v0 = true;                    ///< integrand carries 1/v0(k)
};

double k_max(double k_light, double z0, double tail_multiplier);

/// Full integral over [0, inf). k_light >= 0, z0 > 0. Throws std::domain_error
/// naming k when the integrand is not finite.
QuadResult integrate_response(const Integrand& f, double k_light, double z0,
                              const QuadSpec& spec = {});

/// Propagating segment [0, k_light] only. z0 >= 0 (z0 = 0 drops the phase).
QuadResult integrate_propagating(const Integrand& f, double k_light, double z0,
                                 const QuadSpec& spec = {});

/// Composite Simpson rule on the same split domains, both grids graded
/// quartically toward the light line (evanescent: k = k_light + s^2,
/// s proportional to t^4). Test oracle only; requires
/// n_points >= 10^4 per segment.
cplx integrate_fixed_oracle(const Integrand& f, double k_light, double z0, std::size_t n_points,
                            double tail_multiplier = 40.0);

}  // namespace surfnoise
