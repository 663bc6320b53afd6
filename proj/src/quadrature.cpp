#include "surfnoise/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace surfnoise {

namespace {

constexpr double half_pi = 1.57079632679489661923;

// 15-point Kronrod nodes/weights and the embedded 7-point Gauss weights
// (QUADPACK qk15).
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

using Mapped = std::function<cplx(double)>;

struct Panel {
  int segment = 0;
  double a = 0.0;
  double b = 0.0;
  cplx value;
  double err_re = 0.0;
  double err_im = 0.0;
};

void fail_non_finite(double k) {
  std::ostringstream os;
  os.precision(17);
  os << "integrand is not finite at k = " << k;
  throw std::domain_error(os.str());
}

cplx checked(cplx value, double k) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) fail_non_finite(k);
  return value;
}

Panel gauss_kronrod(const Mapped& f, int segment, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  cplx kronrod = wgk[7] * f(center);
  cplx gauss = wg[3] * f(center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    const cplx sum = f(center - dx) + f(center + dx);
    kronrod += wgk[j] * sum;
    if (j % 2 == 1) gauss += wg[j / 2] * sum;
  }
  Panel p{segment, a, b, kronrod * half, 0.0, 0.0};
  const cplx diff = (kronrod - gauss) * half;
  p.err_re = std::abs(diff.real());
  p.err_im = std::abs(diff.imag());
  return p;
}

struct Segment {
  Mapped f;
  double lo = 0.0;
  double hi = 0.0;
  int initial_panels = 1;
};

struct Totals {
  cplx value;
  double err_re = 0.0;
  double err_im = 0.0;
};

Totals sum_panels(std::vector<Panel>& panels) {
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) {
    return x.segment != y.segment ? x.segment < y.segment : x.a < y.a;
  });
  Totals t;
  for (const Panel& p : panels) {
    t.value += p.value;
    t.err_re += p.err_re;
    t.err_im += p.err_im;
  }
  return t;
}

QuadResult adaptive(const std::vector<Segment>& segments, double tail_bound, const QuadSpec& spec) {
  std::vector<Panel> panels;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const Segment& seg = segments[s];
    if (!(seg.hi > seg.lo)) continue;
    const double width = (seg.hi - seg.lo) / seg.initial_panels;
    for (int i = 0; i < seg.initial_panels; ++i) {
      const double a = seg.lo + i * width;
      const double b = (i + 1 == seg.initial_panels) ? seg.hi : a + width;
      panels.push_back(gauss_kronrod(seg.f, static_cast<int>(s), a, b));
    }
  }

  QuadResult result;
  auto targets = [&](const Totals& t) {
    return std::pair{std::max(spec.rel_tol * std::abs(t.value.real()), spec.abs_floor),
                     std::max(spec.rel_tol * std::abs(t.value.imag()), spec.abs_floor)};
  };

  while (true) {
    Totals t;
    for (const Panel& p : panels) {
      t.value += p.value;
      t.err_re += p.err_re;
      t.err_im += p.err_im;
    }
    const auto [target_re, target_im] = targets(t);
    if (t.err_re + tail_bound <= target_re && t.err_im + tail_bound <= target_im) break;
    if (tail_bound > target_re && tail_bound > target_im) {
      result.converged = false;
      break;
    }
    if (static_cast<int>(panels.size()) >= spec.max_subdivisions) {
      result.converged = false;
      break;
    }

    std::size_t worst = 0;
    double worst_score = -1.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      const double score = std::max(panels[i].err_re / target_re, panels[i].err_im / target_im);
      if (score > worst_score) {
        worst_score = score;
        worst = i;
      }
    }
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b)) {
      result.converged = false;
      break;
    }
    const Mapped& f = segments[static_cast<std::size_t>(p.segment)].f;
    panels[worst] = gauss_kronrod(f, p.segment, p.a, mid);
    panels.push_back(gauss_kronrod(f, p.segment, mid, p.b));
  }

  const Totals t = sum_panels(panels);
  result.value = t.value;
  result.abs_error_real = t.err_re + tail_bound;
  result.abs_error_imag = t.err_im + tail_bound;
  auto rel = [&](double err, double v) { return err / std::max(std::abs(v), spec.abs_floor); };
  result.rel_error_imag = rel(result.abs_error_imag, t.value.imag());
  result.rel_error = std::max(rel(result.abs_error_real, t.value.real()), result.rel_error_imag);
  result.subdivisions = static_cast<int>(panels.size());
  const auto [target_re, target_im] = targets(t);
  result.tail_significant = tail_bound > 0.1 * std::min(target_re, target_im);
  return result;
}

// Propagating segment in theta, k = kl sin(theta), v0 = -i kl cos(theta).
Mapped propagating_map(const Integrand& f, double kl, double z0) {
  return [&f, kl, z0](double theta) {
    const double k = kl * std::sin(theta);
    const double c = kl * std::cos(theta);
    const cplx phase = std::exp(cplx{0.0, 2.0 * c * z0});
    const cplx g = f.numerator(k);
    // dk / v0 = i d(theta)
    const cplx value = f.over_v0 ? cplx{0.0, 1.0} * g * phase : g * phase * c;
    return checked(value, k);
  };
}

double v0_real(double k, double kl) { return std::sqrt((k - kl) * (k + kl)); }

}  // namespace

void QuadSpec::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-2))
    throw std::invalid_argument("quadrature tolerance must lie in (0, 1e-2]");
  if (!(abs_floor >= 0.0)) throw std::invalid_argument("absolute floor must be >= 0");
  if (max_subdivisions < 1) throw std::invalid_argument("max subdivisions must be >= 1");
  if (!(tail_multiplier >= 20.0)) throw std::invalid_argument("tail multiplier must be >= 20");
}

double k_max(double k_light, double z0, double tail_multiplier) {
  return std::max(tail_multiplier / z0, 10.0 * k_light);
}

QuadResult integrate_propagating(const Integrand& f, double k_light, double z0,
                                 const QuadSpec& spec) {
  spec.validate();
  if (!(k_light > 0.0)) return {};
  if (!(z0 >= 0.0)) throw std::invalid_argument("z0 must be >= 0");
  std::vector<Segment> segs{{propagating_map(f, k_light, z0), 0.0, half_pi, 4}};
  QuadResult r = adaptive(segs, 0.0, spec);
  r.singular_segment = true;
  return r;
}

QuadResult integrate_response(const Integrand& f, double k_light, double z0,
                              const QuadSpec& spec) {
  spec.validate();
  if (!(k_light >= 0.0)) throw std::invalid_argument("k_light must be >= 0");
  if (!(z0 > 0.0)) throw std::invalid_argument("z0 must be > 0");
  const double kmax = k_max(k_light, z0, spec.tail_multiplier);

  std::vector<Segment> segs;
  if (k_light > 0.0) segs.push_back({propagating_map(f, k_light, z0), 0.0, half_pi, 4});

  if (f.over_v0 && k_light > 0.0) {
    // k = kl cosh(t): v0 = kl sinh(t), dk / v0 = dt
    const double t_max = std::acosh(kmax / k_light);
    Mapped g = [&f, k_light, z0](double t) {
      const double k = k_light * std::cosh(t);
      const double v0 = k_light * std::sinh(t);
      return checked(f.numerator(k) * std::exp(-2.0 * v0 * z0), k);
    };
    segs.push_back({std::move(g), 0.0, t_max, 16});
  } else {
    Mapped g = [&f, k_light, z0](double k) {
      const double v0 = v0_real(k, k_light);
      cplx value = f.numerator(k) * std::exp(-2.0 * v0 * z0);
      if (f.over_v0) value /= v0;
      return checked(value, k);
    };
    segs.push_back({std::move(g), k_light, kmax, 16});
  }

  const double v0_end = v0_real(kmax, k_light);
  cplx edge = f.numerator(kmax) * std::exp(-2.0 * v0_end * z0);
  if (f.over_v0) edge /= v0_end;
  const double tail_bound = std::abs(checked(edge, kmax)) / (2.0 * z0);

  QuadResult r = adaptive(segs, tail_bound, spec);
  r.singular_segment = k_light > 0.0;
  return r;
}

cplx integrate_fixed_oracle(const Integrand& f, double k_light, double z0, std::size_t n_points,
                            double tail_multiplier) {
  if (n_points < 10000) throw std::invalid_argument("oracle needs at least 1e4 points");
  if (!(z0 > 0.0)) throw std::invalid_argument("z0 must be > 0");
  const std::size_t n = n_points % 2 == 0 ? n_points : n_points + 1;  // even panel count

  auto simpson = [n](const std::function<cplx(double)>& g, double a, double b) {
    const double h = (b - a) / static_cast<double>(n);
    cplx sum = g(a) + g(b);
    for (std::size_t i = 1; i < n; ++i) {
      sum += (i % 2 == 1 ? 4.0 : 2.0) * g(a + h * static_cast<double>(i));
    }
    return sum * (h / 3.0);
  };

  // Both grids are graded quartically toward the light line: r_p can switch
  // sign over a v0 interval of order |v / eps| there, far below any uniform step.
  cplx total;
  if (k_light > 0.0) {
    const Mapped p = propagating_map(f, k_light, z0);
    auto graded = [&p](double u) {
      const double u3 = u * u * u;
      return p(half_pi * (1.0 - u3 * u)) * (4.0 * half_pi * u3);
    };
    total += simpson(graded, 0.0, 1.0);
  }

  const double kmax = k_max(k_light, z0, tail_multiplier);
  const double s_max = std::sqrt(kmax - k_light);
  // k = kl + s^2, s = s_max t^4. With the 1/v0 measure: dk / v0 = 2 ds / sqrt(2 kl + s^2).
  auto g = [&f, k_light, z0, s_max](double t) -> cplx {
    const double t3 = t * t * t;
    const double s = s_max * t3 * t;
    const double ds = 4.0 * s_max * t3;
    const double k = k_light + s * s;
    const double root = std::sqrt(2.0 * k_light + s * s);
    const double v0 = s * root;
    const cplx e = f.numerator(k) * std::exp(-2.0 * v0 * z0);
    if (!f.over_v0) return e * (2.0 * s * ds);
    if (root == 0.0) return 0.0;  // k_light = 0 and s = 0: g(0) = 0 assumed
    return e * (2.0 * ds / root);
  };
  total += simpson(g, 0.0, 1.0);
  return total;
}

}  // namespace surfnoise
