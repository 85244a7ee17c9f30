#include "annulus/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "annulus/error.hpp"
#include "annulus/means.hpp"

namespace annulus {

void SamplerConfig::validate() const {
  if (N < 1) throw Error(ErrorKind::ParameterDomain, "sampler N must be >= 1");
  if (!(decay > 0.0 && decay < 1.0)) throw Error(ErrorKind::ParameterDomain, "sampler decay must lie in (0, 1)");
  if (!(outer_radius >= 1.0) || !std::isfinite(outer_radius)) {
    throw Error(ErrorKind::ParameterDomain, "sampler outer radius must be finite and >= 1");
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Complex Rng::unit_phase() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

HarmonicSeries random_series(const SamplerConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  HarmonicSeries h(cfg.N);
  const auto draw = [&](double bound) { return bound * rng.uniform() * rng.unit_phase(); };
  for (int n = -cfg.N; n <= cfg.N; ++n) {
    if (n == 0) continue;
    const int k = std::abs(n);
    const double bound = std::pow(cfg.decay, k);
    const double damping = std::pow(cfg.outer_radius, -k);
    h.set_a(n, draw(n > 0 ? bound * damping : bound));
    h.set_b(n, draw(n < 0 ? bound * damping : bound));
  }
  if (cfg.include_log) h.set_a(0, draw(1.0));
  if (cfg.include_const) h.set_b(0, draw(1.0));
  return h;
}

HarmonicSeries normalize_inner_circle(const HarmonicSeries& h) {
  HarmonicSeries centered = h;
  centered.set_b(0, 0.0);
  const double u1 = U_closed(centered).value(1.0);
  if (!(u1 > 0.0)) throw Error(ErrorKind::Degenerate, "quadratic mean vanishes on the inner circle");
  return scale_rotate(centered, 1.0 / std::sqrt(u1));
}

HarmonicSeries perturb_extremal(double lambda, int n, Complex eps, bool renormalize) {
  HarmonicSeries h = extremal_map(lambda);
  if (std::abs(n) > h.order()) h = h.with_order(std::abs(n));
  if (n == 0) {
    h.set_b(0, h.b(0) + eps);
  } else {
    h.set_a(n, h.a(n) + eps);
  }
  return renormalize ? normalize_inner_circle(h) : h;
}

InjectivityReport injectivity_probe(const HarmonicSeries& h, double R, int density, const QuadratureConfig& cfg) {
  Annulus{R};
  if (density < 2) throw Error(ErrorKind::ParameterDomain, "probe density must be >= 2");
  const int angular = 4 * density;
  InjectivityReport report{std::numeric_limits<double>::infinity(), true};
  for (int i = 0; i < density; ++i) {
    const double rho = 1.0 + (R - 1.0) * i / (density - 1);
    for (int j = 0; j < angular; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / angular;
      report.jacobian_min = std::min(report.jacobian_min, jacobian(h, {rho, theta}));
    }
    try {
      if (winding_number(h, rho, cfg) != 1) report.windings_ok = false;
    } catch (const Error&) {
      report.windings_ok = false;
    }
  }
  return report;
}

}  // namespace annulus
