// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "annulus/bounds.hpp"
#include "annulus/error.hpp"
#include "annulus/means.hpp"
#include "annulus/operators.hpp"
#include "annulus/quadrature.hpp"
#include "annulus/sampling.hpp"

using namespace annulus;

namespace {

constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;
const double kOuter = std::exp(1.5);
constexpr std::uint64_t kSeed = 20240601;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(i + 1 == n ? b : a + (b - a) * i / (n - 1));
  return out;
}

HarmonicSeries draw(Rng& rng, double outer, int max_order = 16, bool extras = true) {
  SamplerConfig cfg;
  cfg.seed = derive_seed(static_cast<std::uint64_t>(rng.uniform() * 0x1.0p53), 0);
  cfg.N = 1 + static_cast<int>(rng.uniform() * max_order);
  cfg.include_log = extras && rng.uniform() < 0.5;
  cfg.include_const = extras && rng.uniform() < 0.5;
  cfg.outer_radius = outer;
  return random_series(cfg);
}

double draw_lambda(Rng& rng) { return rng.uniform(-1.0 + 1e-6, 1.0); }

Outcome extremal_annihilation() {
  double worst = 0.0;
  for (double lambda : {-0.9, -0.5, 0.0, 0.5, 1.0}) {
    const LambdaOperator op(lambda);
    const RadialProfile u = U_closed(extremal_map(lambda));
    for (int i = 1; i <= 500; ++i) {
      const double rho = i == 500 ? kOuter : 1.0 + (kOuter - 1.0) * i / 500.0;
      worst = std::max(worst, std::abs(op.apply(u, rho)));
    }
  }
  return {worst < 1e-9, "max |L[U(h^lambda)]| = " + fmt(worst) + " (tol 1e-9)"};
}

Outcome operator_identities() {
  Rng rng(derive_seed(kSeed, 2));
  double worst3 = 0.0, worst4 = 0.0;
  for (int s = 0; s < 100; ++s) {
    const HarmonicSeries h = draw(rng, kOuter);
    for (int i = 0; i < 10; ++i) {
      const double lambda = draw_lambda(rng);
      for (int j = 0; j < 10; ++j) {
        const double rho = rng.uniform(1.0, kOuter);
        worst3 = std::max(worst3, identity_uc3_residual(h, lambda, rho, {}));
        worst4 = std::max(worst4, identity_uc4_residual(h, lambda, rho, {}));
      }
    }
  }
  return {worst3 < 1e-9 && worst4 < 1e-9,
          "energy form " + fmt(worst3) + ", square form " + fmt(worst4) + " over 10000 cases (tol 1e-9)"};
}

Outcome k_endpoint_identity() {
  Rng rng(derive_seed(kSeed, 3));
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const HarmonicSeries h = draw(rng, kOuter);
    const double lambda = draw_lambda(rng);
    const double R = rng.uniform(1.0 + 1e-3, kOuter);
    const double closed = K_endpoint(h, lambda, R);
    worst = std::max(worst, std::abs(K_quadrature(h, lambda, R, {}) - closed) / (1.0 + std::abs(closed)));
  }
  double extremal = 0.0;
  for (double lambda : {-0.9, -0.5, 0.0, 0.5, 1.0}) {
    for (double R : {1.1, 2.0, kE, kOuter}) {
      const HarmonicSeries h = extremal_map(lambda);
      extremal = std::max({extremal, std::abs(K_quadrature(h, lambda, R, {})), std::abs(K_endpoint(h, lambda, R))});
    }
  }
  return {worst < 1e-6 && extremal < 1e-8,
          "relative gap " + fmt(worst) + " (tol 1e-6), |K[U(h^lambda)]| " + fmt(extremal) + " (tol 1e-8)"};
}

Outcome variance_subsolution() {
  Rng rng(derive_seed(kSeed, 4));
  const std::vector<double> grid = linspace(1.01, kOuter, 200);
  double lowest = kInf;
  for (int t = 0; t < 1000; ++t) {
    const HarmonicSeries h = draw(rng, kOuter);
    lowest = std::min(lowest, variance_subsolution_min(h, draw_lambda(rng), grid));
  }
  double equality = 0.0;
  for (int t = 0; t < 50; ++t) {
    const double lambda = draw_lambda(rng);
    const Complex alpha = rng.uniform(0.1, 1.0) * rng.unit_phase();
    const Complex beta = rng.uniform() * rng.unit_phase();
    HarmonicSeries h(1);
    h.set_a(0, rng.uniform(0.0, 0.5) * rng.unit_phase()).set_b(0, rng.uniform() * rng.unit_phase());
    h.set_a(1, alpha / (1.0 + lambda)).set_b(1, alpha * lambda / (1.0 + lambda));
    h.set_b(-1, beta / (1.0 + lambda)).set_a(-1, beta * lambda / (1.0 + lambda));
    const LambdaOperator op(lambda);
    const RadialProfile v = V_closed(h);
    for (double rho : grid) equality = std::max(equality, std::abs(op.apply(v, rho)));
  }
  return {lowest >= -1e-10 && equality < 1e-11,
          "min L[V] " + fmt(lowest) + " (>= -1e-10), equality family " + fmt(equality) + " (tol 1e-11)"};
}

Outcome initial_speed_bound() {
  Rng rng(derive_seed(kSeed, 5));
  const std::vector<double> s_grid = linspace(1.0, kOuter, 50);
  double worst = -kInf;
  int accepted = 0, skipped = 0;
  while (accepted < 100) {
    const HarmonicSeries h = normalize_inner_circle(draw(rng, 1.0));
    if (initial_speed(h) < 0.0) {
      ++skipped;
      continue;
    }
    ++accepted;
    for (double s : s_grid) {
      const SpeedBound b = mean0_bound_check(h, s);
      worst = std::max(worst, b.rhs - b.lhs);
    }
  }
  double equality = 0.0;
  for (double lambda : {-0.9, -0.5, 0.0, 0.5, 1.0}) {
    const HarmonicSeries h = scale_rotate(extremal_map(lambda), rng.unit_phase());
    for (double s : s_grid) {
      const SpeedBound b = mean0_bound_check(h, s);
      equality = std::max(equality, std::abs(b.lhs - b.rhs));
    }
  }
  return {worst <= 1e-10 && equality < 1e-12,
          "max shortfall " + fmt(worst) + " (tol 1e-10) over 100 series (" + std::to_string(skipped) +
              " negative-speed draws skipped), equality margin " + fmt(equality) + " (tol 1e-12)"};
}

Outcome certificates() {
  double phi_min = kInf;
  for (double R : linspace(kE, kOuter, 1000)) phi_min = std::min(phi_min, phi(R));
  double d_min = kInf;
  for (int n = 2; n <= 50; ++n) {
    for (double R : linspace(kE, 10.0, 200)) d_min = std::min(d_min, mode_discriminant(n, R));
  }
  double factored = 0.0;
  for (double R : linspace(kE, 10.0, 200)) {
    const double d = mode_discriminant(2, R);
    factored = std::max(factored, std::abs(d - mode_discriminant_n2_factored(R)) / std::abs(d));
  }
  const double phi_e = phi(kE), phi_outer = phi(kOuter);
  const bool values = std::abs(phi_e - 164.95509105845763) < 1e-9 && std::abs(phi_outer - 8.0991261836573155) < 1e-9;
  return {phi_min > 0.0 && d_min > 0.0 && factored < 1e-6 && values,
          "min phi " + fmt(phi_min) + ", phi(e) " + fmt(phi_e) + ", phi(e^1.5) " + fmt(phi_outer) + ", min D " +
              fmt(d_min) + ", n=2 factored rel " + fmt(factored)};
}

Outcome per_mode_and_variance_k() {
  Rng rng(derive_seed(kSeed, 7));
  double worst = 0.0;
  for (double R : {kE, 2.9, kOuter}) {
    for (int n = 1; n <= 8; ++n) {
      for (int t = 0; t < 10; ++t) {
        SamplerConfig cfg;
        cfg.seed = derive_seed(static_cast<std::uint64_t>(rng.uniform() * 0x1.0p53), 1);
        cfg.N = n;
        cfg.outer_radius = R;
        worst = std::max(worst, per_mode_identity(random_series(cfg), n, R, {}).residual());
      }
    }
  }
  double shortfall = -kInf;
  for (int t = 0; t < 100; ++t) {
    const double R = rng.uniform(std::nextafter(kE, 3.0), kOuter);
    const IdentityCheck c = variance_functional_check(draw(rng, R), R, {});
    shortfall = std::max(shortfall, c.rhs - c.lhs);
  }
  return {worst < 1e-6 && shortfall <= 1e-6,
          "per-mode residual " + fmt(worst) + " (tol 1e-6), K[V] shortfall " + fmt(shortfall) + " (tol 1e-6)"};
}

Outcome boundary_identity_and_area() {
  Rng rng(derive_seed(kSeed, 8));
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) worst = std::max(worst, boundary_identity(draw(rng, 1.0), {}).residual());
  const HarmonicSeries h1 = extremal_map(1.0);
  double area_gap = 0.0;
  for (double eps : {1e-6, 1e-9, 1e-12}) area_gap = std::max(area_gap, std::abs(enclosed_area(h1, 1.0 + eps, {}) - kPi));
  return {worst < 1e-10 && area_gap < 1e-8,
          "boundary residual " + fmt(worst) + " (tol 1e-10), |area - pi| near C_1 " + fmt(area_gap) + " (tol 1e-8)"};
}

Outcome schottky() {
  Rng rng(derive_seed(kSeed, 9));
  constexpr double R = 2.0;
  double radius_short = -kInf, area_short = -kInf;
  int count = 0;
  for (; count < 50; ++count) {
    const int order = 2 + static_cast<int>(rng.uniform() * 7.0);
    HarmonicSeries h(order);
    double peak = 0.0;
    for (int n = -order; n <= order; ++n) {
      if (n == 0 || n == 1) continue;
      h.set_a(n, rng.uniform() * std::pow(0.6, std::abs(n)) * rng.unit_phase());
      peak += std::abs(h.a(n));
    }
    h = scale_rotate(h, rng.uniform(0.1, 0.5) * 1e-6 / peak);
    h.set_a(1, rng.unit_phase());
    const InjectivityReport probe = injectivity_probe(h, R, 16);
    const SchottkyReport rep = schottky_check(h, R);
    if (!(probe.jacobian_min > 0.0) || !probe.windings_ok || !rep.applicable) {
      return {false, "series " + std::to_string(count) + " left the class: " + rep.reason};
    }
    radius_short = std::max(radius_short, R - rep.mean_outer_radius);
    area_short = std::max(area_short, rep.area_floor - rep.image_area);
  }
  return {radius_short <= 1e-9 && area_short <= 1e-6,
          "R - R* " + fmt(radius_short) + " (tol 1e-9), pi(R^2-1) - area " + fmt(area_short) + " (tol 1e-6), " +
              std::to_string(count) + " series"};
}

Outcome critical_configuration() {
  double worst = 0.0;
  for (double R : {1.5, kE, kOuter}) {
    const BoundReport r = theorem_gate(extremal_map(1.0), R);
    worst = std::max(worst, std::abs(r.margin));
    if (r.verdict != Verdict::Pass) return {false, "verdict " + to_string(r.verdict) + " at R = " + fmt(R)};
  }
  const UniquenessReport u = uniqueness_probe(2.0, 1e-4, 1e-2, 9);
  const bool probe_ok =
      u.gaps_positive && std::abs(u.slope - 2.0) <= 0.1 && std::abs(u.equality_gap) < 1e-12 && u.class_flag_trips;
  return {worst < 1e-12 && probe_ok, "critical margin " + fmt(worst) + " (tol 1e-12), gap slope " + fmt(u.slope) +
                                         " (2 +- 0.1), smallest gap " + fmt(u.samples.front().gap)};
}

Outcome oracle_agreement() {
  Rng rng(derive_seed(kSeed, 11));
  double mean_gap = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const HarmonicSeries h = draw(rng, kOuter);
    const double rho = rng.uniform(1.0, kOuter);
    mean_gap = std::max(mean_gap, std::abs(U_closed(h).value(rho) - quadratic_mean_numeric(h, rho, {})));
  }
  double energy_gap = 0.0;
  for (int t = 0; t < 50; ++t) {
    const HarmonicSeries h = draw(rng, kOuter);
    double r1 = rng.uniform(1.0, kOuter), r2 = rng.uniform(1.0, kOuter);
    if (r1 > r2) std::swap(r1, r2);
    r2 = std::max(r2, r1 + 1e-2);
    const RadialProfile u = U_closed(h);
    const double closed = kPi * (r2 * u.deriv1(r2) - r1 * u.deriv1(r1));
    energy_gap = std::max(energy_gap, std::abs(dirichlet_energy(h, r1, r2, {}) - closed) / std::abs(closed));
  }
  bool windings = true;
  for (double lambda : {-0.9, -0.5, 0.0, 0.5, 1.0}) {
    for (double rho : linspace(1.0, kOuter, 20)) windings = windings && winding_number(extremal_map(lambda), rho, {}) == 1;
  }
  double jac_gap = 0.0;
  const HarmonicSeries h1 = extremal_map(1.0);
  for (int t = 0; t < 100; ++t) {
    const double rho = rng.uniform(1.0, kOuter);
    const double r4 = std::pow(rho, 4);
    jac_gap = std::max(jac_gap, std::abs(jacobian(h1, {rho, rng.uniform(0.0, 2.0 * kPi)}) - (r4 - 1.0) / (4.0 * r4)));
  }
  return {mean_gap < 1e-12 && energy_gap < 1e-8 && windings && jac_gap < 1e-12,
          "U gap " + fmt(mean_gap) + " (tol 1e-12), energy rel " + fmt(energy_gap) + " (tol 1e-8), windings " +
              (windings ? "all 1" : "MISMATCH") + ", Jacobian gap " + fmt(jac_gap) + " (tol 1e-12)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 extremal annihilation", extremal_annihilation},
      {"2 operator identities", operator_identities},
      {"3 K endpoint identity", k_endpoint_identity},
      {"4 variance subsolution", variance_subsolution},
      {"5 initial-speed bound", initial_speed_bound},
      {"6 positivity certificates", certificates},
      {"7 per-mode form and K[V] inequality", per_mode_and_variance_k},
      {"8 boundary identity and inner area", boundary_identity_and_area},
      {"9 Schottky refinement", schottky},
      {"10 critical configuration", critical_configuration},
      {"11 oracle agreement", oracle_agreement},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    std::printf("%s  criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
