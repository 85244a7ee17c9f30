#include "annulus/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>

#include "annulus/bounds.hpp"
#include "annulus/error.hpp"
#include "annulus/means.hpp"
#include "annulus/operators.hpp"
#include "annulus/sampling.hpp"

namespace annulus {

namespace {

const double kOuter = std::exp(1.5);
constexpr double kLambdaMin = -0.95;

struct Probe {
  std::string name;
  std::string anchor;
  double tolerance;
  std::function<double(Rng&, int)> trial;  // residual of one trial
};

using CheckFn = std::function<VerificationCheck()>;

std::uint64_t salt(const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : name) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

CheckFn make_check(Probe probe, std::uint64_t seed, int trials) {
  return [probe = std::move(probe), seed, trials]() {
    VerificationCheck check{probe.name, probe.anchor, -std::numeric_limits<double>::infinity(), probe.tolerance,
                            false, trials};
    for (int t = 0; t < trials; ++t) {
      Rng rng(derive_seed(seed ^ salt(probe.name), static_cast<std::uint64_t>(t)));
      double r;
      try {
        r = probe.trial(rng, t);
      } catch (const Error&) {
        r = std::numeric_limits<double>::infinity();
      }
      if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
      check.residual = std::max(check.residual, r);
    }
    check.pass = check.residual <= check.tolerance;
    return check;
  };
}

// Deterministic checks run once regardless of the trial count.
CheckFn make_fixed(std::string name, std::string anchor, double tolerance, std::function<double()> body) {
  return make_check({std::move(name), std::move(anchor), tolerance, [body](Rng&, int) { return body(); }}, 0, 1);
}

HarmonicSeries draw_series(Rng& rng, double outer, bool with_log_const = true) {
  SamplerConfig cfg;
  cfg.seed = derive_seed(static_cast<std::uint64_t>(rng.uniform() * 0x1.0p53), 0);
  cfg.N = 1 + static_cast<int>(rng.uniform() * 16.0);
  cfg.include_log = with_log_const && rng.uniform() < 0.5;
  cfg.include_const = with_log_const && rng.uniform() < 0.5;
  cfg.outer_radius = outer;
  return random_series(cfg);
}

double draw_lambda(Rng& rng) { return rng.uniform(kLambdaMin, 1.0); }

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = a + (b - a) * i / (count - 1);
  out.back() = b;
  return out;
}

HarmonicSeries equality_family(Rng& rng, double lambda) {
  const Complex alpha = rng.uniform(0.1, 1.0) * rng.unit_phase();
  const Complex beta = rng.uniform(0.0, 1.0) * rng.unit_phase();
  HarmonicSeries h(1);
  h.set_a(0, rng.uniform(0.0, 0.5) * rng.unit_phase());
  h.set_b(0, rng.uniform(0.0, 1.0) * rng.unit_phase());
  h.set_a(1, alpha / (1.0 + lambda));
  h.set_b(1, alpha * lambda / (1.0 + lambda));
  h.set_b(-1, beta / (1.0 + lambda));
  h.set_a(-1, beta * lambda / (1.0 + lambda));
  return h;
}

// A normalized class-D series with nonnegative initial speed, redrawing as needed.
// Outer-radius damping would leave only decaying modes near C_1 (negative speed),
// so these draws use the plain decay bound.
HarmonicSeries draw_speed_class(Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    HarmonicSeries h = normalize_inner_circle(draw_series(rng, 1.0));
    if (initial_speed(h) >= 0.0) return h;
  }
  throw Error(ErrorKind::Nonconvergence, "no series with nonnegative initial speed");
}

HarmonicSeries draw_conformal(Rng& rng) {
  const int order = 2 + static_cast<int>(rng.uniform() * 7.0);
  HarmonicSeries p(order);
  for (int n = -order; n <= order; ++n) {
    if (n != 0 && n != 1) p.set_a(n, rng.uniform() * std::pow(0.6, std::abs(n)) * rng.unit_phase());
  }
  double peak = 0.0;
  for (int n = -order; n <= order; ++n) peak += std::abs(p.a(n));
  const double delta = peak > 0.0 ? rng.uniform(0.1, 0.5) * 1e-6 / peak : 0.0;
  HarmonicSeries h = scale_rotate(p, delta);
  h.set_a(1, rng.unit_phase());
  return h;
}

std::vector<CheckFn> identities(std::uint64_t seed, int trials, const Tolerances& tol, const QuadratureConfig& cfg) {
  std::vector<CheckFn> out;
  out.push_back(make_check({"identity.energy-form", "L[U] as twice the mean of energy minus a radial flux",
                            tol.identity,
                            [cfg](Rng& rng, int) {
                              const HarmonicSeries h = draw_series(rng, kOuter);
                              return identity_uc3_residual(h, draw_lambda(rng), rng.uniform(1.0, kOuter), cfg);
                            }},
                           seed, trials));
  out.push_back(make_check({"identity.square-form", "L[U] as a mean of squares over rho^2", tol.identity,
                            [cfg](Rng& rng, int) {
                              const HarmonicSeries h = draw_series(rng, kOuter);
                              return identity_uc4_residual(h, draw_lambda(rng), rng.uniform(1.0, kOuter), cfg);
                            }},
                           seed, trials));
  out.push_back(make_check({"identity.extremal-annihilation", "L^lambda annihilates U(h^lambda)", tol.annihilation,
                            [](Rng& rng, int) {
                              const double lambda = draw_lambda(rng);
                              const LambdaOperator op(lambda);
                              const RadialProfile u = U_closed(extremal_map(lambda));
                              double worst = 0.0;
                              for (double rho : linspace(1.0, kOuter, 50)) worst = std::max(worst, std::abs(op.apply(u, rho)));
                              return worst;
                            }},
                           seed, trials));
  out.push_back(make_check({"identity.boundary", "inner-circle boundary identity", tol.boundary,
                            [cfg](Rng& rng, int) { return boundary_identity(draw_series(rng, 1.0), cfg).residual(); }},
                           seed, trials));
  out.push_back(make_check({"oracle.quadratic-mean", "mode orthogonality on circles", tol.oracle,
                            [cfg](Rng& rng, int) {
                              const HarmonicSeries h = draw_series(rng, kOuter);
                              const double rho = rng.uniform(1.0, kOuter);
                              return std::abs(U_closed(h).value(rho) - quadratic_mean_numeric(h, rho, cfg));
                            }},
                           seed, trials));
  out.push_back(make_check({"oracle.energy", "Dirichlet energy from the flux of U", tol.energy,
                            [cfg](Rng& rng, int) {
                              const HarmonicSeries h = draw_series(rng, kOuter);
                              double r1 = rng.uniform(1.0, kOuter);
                              double r2 = rng.uniform(1.0, kOuter);
                              if (r1 > r2) std::swap(r1, r2);
                              if (r2 - r1 < 1e-3) r2 = r1 + 1e-3;
                              const RadialProfile u = U_closed(h);
                              const double closed = std::numbers::pi * (r2 * u.deriv1(r2) - r1 * u.deriv1(r1));
                              const double numeric = dirichlet_energy(h, r1, r2, cfg);
                              return std::abs(numeric - closed) / std::max(std::abs(closed), 1e-300);
                            }},
                           seed, trials));
  return out;
}

std::vector<CheckFn> subsolution(std::uint64_t seed, int trials, const Tolerances& tol) {
  std::vector<CheckFn> out;
  const std::vector<double> grid = linspace(1.01, kOuter, 200);
  out.push_back(make_check({"subsolution.variance-min", "variance is a subsolution of L^lambda", tol.subsolution,
                            [grid](Rng& rng, int) {
                              return -variance_subsolution_min(draw_series(rng, kOuter), draw_lambda(rng), grid);
                            }},
                           seed, trials));
  out.push_back(make_check({"subsolution.mode-lower-bound", "L[V] dominates (2/rho^2) sum (n^2-1) U_n",
                            tol.subsolution,
                            [grid](Rng& rng, int) {
                              const HarmonicSeries h = draw_series(rng, kOuter);
                              const double lambda = draw_lambda(rng);
                              const LambdaOperator op(lambda);
                              const RadialProfile v = V_closed(h);
                              double worst = -std::numeric_limits<double>::infinity();
                              for (double rho : grid) {
                                worst = std::max(worst, variance_mode_lower_bound(h, rho) - op.apply(v, rho));
                              }
                              return worst;
                            }},
                           seed, trials));
  out.push_back(make_check({"subsolution.equality-family", "L[V] vanishes on the equality family", tol.equality,
                            [grid](Rng& rng, int) {
                              const double lambda = draw_lambda(rng);
                              const HarmonicSeries h = equality_family(rng, lambda);
                              const LambdaOperator op(lambda);
                              const RadialProfile v = V_closed(h);
                              double worst = 0.0;
                              for (double rho : grid) worst = std::max(worst, std::abs(op.apply(v, rho)));
                              return worst;
                            }},
                           seed, trials));
  out.push_back(make_check({"subsolution.initial-speed-bound", "sqrt(U(s)) dominates the extremal profile",
                            tol.speed_bound,
                            [](Rng& rng, int) {
                              const HarmonicSeries h = draw_speed_class(rng);
                              double worst = -std::numeric_limits<double>::infinity();
                              for (double s : linspace(1.0, kOuter, 50)) {
                                const SpeedBound b = mean0_bound_check(h, s);
                                worst = std::max(worst, b.rhs - b.lhs);
                              }
                              return worst;
                            }},
                           seed, trials));
  out.push_back(make_check({"subsolution.initial-speed-equality", "equality for rotations of h^lambda",
                            tol.oracle,
                            [](Rng& rng, int) {
                              const double lambda = draw_lambda(rng);
                              const HarmonicSeries h = scale_rotate(extremal_map(lambda), rng.unit_phase());
                              double worst = 0.0;
                              for (double s : linspace(1.0, kOuter, 50)) {
                                const SpeedBound b = mean0_bound_check(h, s);
                                worst = std::max(worst, std::abs(b.lhs - b.rhs));
                              }
                              return worst;
                            }},
                           seed, trials));
  return out;
}

std::vector<CheckFn> kfunctional(std::uint64_t seed, int trials, const Tolerances& tol, const QuadratureConfig& cfg) {
  std::vector<CheckFn> out;
  out.push_back(make_check({"kfunctional.endpoint", "K functional equals its endpoint form", tol.endpoint,
                            [cfg](Rng& rng, int) {
                              const HarmonicSeries h = draw_series(rng, kOuter);
                              const double lambda = draw_lambda(rng);
                              const double R = rng.uniform(1.05, kOuter);
                              const double closed = K_endpoint(h, lambda, R);
                              return std::abs(K_quadrature(h, lambda, R, cfg) - closed) / (1.0 + std::abs(closed));
                            }},
                           seed, trials));
  out.push_back(make_check({"kfunctional.extremal", "K functional vanishes on h^lambda", tol.extremal_k,
                            [cfg](Rng& rng, int) {
                              const double lambda = draw_lambda(rng);
                              const double R = rng.uniform(1.05, kOuter);
                              const HarmonicSeries h = extremal_map(lambda);
                              return std::max(std::abs(K_quadrature(h, lambda, R, cfg)), std::abs(K_endpoint(h, lambda, R)));
                            }},
                           seed, trials));
  out.push_back(make_check({"kfunctional.per-mode", "weighted L[U_n] as a quadratic form in (a_n, b_n)",
                            tol.per_mode,
                            [cfg](Rng& rng, int t) {
                              const double radii[] = {std::numbers::e, 2.9, kOuter};
                              const double R = radii[t % 3];
                              const int n = 1 + (t / 3) % 8;
                              SamplerConfig sc;
                              sc.seed = derive_seed(static_cast<std::uint64_t>(rng.uniform() * 0x1.0p53), 1);
                              sc.N = n;
                              sc.outer_radius = R;
                              return per_mode_identity(random_series(sc), n, R, cfg).residual();
                            }},
                           seed, trials));
  out.push_back(make_check({"kfunctional.variance-inequality", "K[V] dominates the inner boundary sum",
                            tol.variance_k,
                            [cfg](Rng& rng, int) {
                              const double R = rng.uniform(std::nextafter(std::numbers::e, 3.0), kOuter);
                              const IdentityCheck c = variance_functional_check(draw_series(rng, R), R, cfg);
                              return c.rhs - c.lhs;
                            }},
                           seed, trials));
  return out;
}

std::vector<CheckFn> certificates() {
  std::vector<CheckFn> out;
  const std::vector<double> phi_grid = linspace(std::numbers::e, kOuter, 1000);
  out.push_back(make_fixed("certificate.phi-positive", "phi > 0 on [e, e^{3/2}]", 0.0, [phi_grid]() {
    double lowest = std::numeric_limits<double>::infinity();
    for (double R : phi_grid) lowest = std::min(lowest, phi(R));
    return -lowest;
  }));
  out.push_back(make_fixed("certificate.phi-concavity", "R^-4 phi is concave for R >= e", 0.0, []() {
    double highest = -std::numeric_limits<double>::infinity();
    for (double R : linspace(std::numbers::e, 20.0, 1000)) highest = std::max(highest, phi_scaled_second_derivative(R));
    return highest;
  }));
  out.push_back(make_fixed("certificate.discriminant-positive", "D(n, R) > 0 for n >= 2, R >= e", 0.0, []() {
    double lowest = std::numeric_limits<double>::infinity();
    for (int n = 2; n <= 50; ++n) {
      for (double R : linspace(std::numbers::e, 10.0, 100)) lowest = std::min(lowest, mode_discriminant(n, R));
    }
    return -lowest;
  }));
  out.push_back(make_fixed("certificate.discriminant-forms", "D(n, R) expanded and n = 2 factored forms", 1e-6, []() {
    double worst = 0.0;
    for (double R : linspace(std::numbers::e, 10.0, 100)) {
      for (int n = 2; n <= 50; ++n) {
        const double d = mode_discriminant(n, R);
        worst = std::max(worst, std::abs(d - mode_discriminant_expanded(n, R)) / std::abs(d));
      }
      const double d2 = mode_discriminant(2, R);
      worst = std::max(worst, std::abs(d2 - mode_discriminant_n2_factored(R)) / std::abs(d2));
    }
    return worst;
  }));
  out.push_back(make_fixed("certificate.comparison-weight", "comparison weight >= 0 for 1 <= rho <= R", 1e-12, []() {
    double lowest = std::numeric_limits<double>::infinity();
    for (double R : linspace(1.01, 20.0, 60)) {
      for (double lambda : linspace(-1.0 + 1e-6, 1.0, 41)) {
        for (double rho : linspace(1.0, R, 60)) lowest = std::min(lowest, comparison_weight(R, lambda, rho));
      }
    }
    return -lowest;
  }));
  out.push_back(make_fixed("certificate.bound-ordering", "Weitsman <= Kalaj <= Nitsche on (1, 20]", 0.0, []() {
    double worst = -std::numeric_limits<double>::infinity();
    for (double R : linspace(1.001, 20.0, 2000)) {
      worst = std::max({worst, weitsman_bound(R) - kalaj_bound(R), kalaj_bound(R) - nitsche_bound(R)});
    }
    return worst;
  }));
  out.push_back(make_fixed("certificate.small-modulus", "small-modulus condition on 1 < R <= 2, 0 <= lambda <= 1",
                           0.0, []() {
                             double lowest = std::numeric_limits<double>::infinity();
                             for (double R : linspace(1.001, 2.0, 400)) {
                               for (double lambda : linspace(0.0, 1.0, 21)) {
                                 lowest = std::min(lowest, small_modulus_condition(R, lambda));
                               }
                             }
                             return -lowest;
                           }));
  return out;
}

std::vector<CheckFn> schottky(std::uint64_t seed, int trials, const Tolerances& tol, const QuadratureConfig& cfg) {
  constexpr double R = 2.0;
  const auto run = [cfg](Rng& rng) {
    const HarmonicSeries h = draw_conformal(rng);
    const InjectivityReport probe = injectivity_probe(h, R, 16, cfg);
    if (!(probe.jacobian_min > 0.0) || !probe.windings_ok) {
      throw Error(ErrorKind::OutOfClass, "injectivity probe failed");
    }
    const SchottkyReport rep = schottky_check(h, R, cfg);
    if (!rep.applicable) throw Error(ErrorKind::OutOfClass, rep.reason);
    return rep;
  };
  std::vector<CheckFn> out;
  out.push_back(make_check({"schottky.radius", "conformal maps do not shrink the mean outer radius",
                            tol.schottky_radius,
                            [run](Rng& rng, int) {
                              const SchottkyReport r = run(rng);
                              return std::max(r.R - r.mean_outer_radius, r.coefficient_floor - r.coefficient_sum);
                            }},
                           seed, trials));
  out.push_back(make_check({"schottky.area", "image area at least pi (R^2 - 1)", tol.schottky_area,
                            [run](Rng& rng, int) {
                              const SchottkyReport r = run(rng);
                              return std::max(r.area_floor - r.image_area, r.area_crosscheck);
                            }},
                           seed, trials));
  return out;
}

}  // namespace

std::map<std::string, double> Tolerances::table() const {
  return {{"identity", identity},       {"annihilation", annihilation}, {"endpoint", endpoint},
          {"extremal-k", extremal_k},   {"subsolution", subsolution},   {"equality", equality},
          {"speed-bound", speed_bound}, {"per-mode", per_mode},         {"variance-k", variance_k},
          {"boundary", boundary},       {"schottky-radius", schottky_radius},
          {"schottky-area", schottky_area}, {"oracle", oracle},         {"energy", energy}};
}

bool Tolerances::set(const std::string& name, double value) {
  double* slots[] = {&identity,    &annihilation, &endpoint,   &extremal_k, &subsolution,     &equality,      &speed_bound,
                     &per_mode,    &variance_k,   &boundary,   &schottky_radius, &schottky_area, &oracle, &energy};
  const char* names[] = {"identity",    "annihilation", "endpoint", "extremal-k", "subsolution",     "equality",
                         "speed-bound", "per-mode",     "variance-k", "boundary", "schottky-radius", "schottky-area",
                         "oracle",      "energy"};
  for (std::size_t i = 0; i < std::size(names); ++i) {
    if (name == names[i]) {
      *slots[i] = value;
      return true;
    }
  }
  return false;
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "subsolution", "kfunctional", "certificates", "schottky",
                                              "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

VerificationReport run_suite(const std::string& suite, std::uint64_t seed, int trials, const Tolerances& tol,
                             const QuadratureConfig& cfg) {
  if (!is_suite(suite)) throw Error(ErrorKind::ParameterDomain, "unknown suite: " + suite);
  if (trials < 0) throw Error(ErrorKind::ParameterDomain, "trials must be >= 0");
  cfg.validate();
  VerificationReport report{suite, seed, trials, {}};
  if (trials == 0) return report;

  std::vector<CheckFn> jobs;
  const auto add = [&](std::vector<CheckFn> more) {
    for (auto& f : more) jobs.push_back(std::move(f));
  };
  const bool all = suite == "all";
  if (all || suite == "identities") add(identities(seed, trials, tol, cfg));
  if (all || suite == "subsolution") add(subsolution(seed, trials, tol));
  if (all || suite == "kfunctional") add(kfunctional(seed, trials, tol, cfg));
  if (all || suite == "certificates") add(certificates());
  if (all || suite == "schottky") add(schottky(seed, trials, tol, cfg));

  std::vector<std::future<VerificationCheck>> pending;
  pending.reserve(jobs.size());
  for (auto& job : jobs) pending.push_back(std::async(std::launch::async, job));
  for (auto& f : pending) report.checks.push_back(f.get());
  std::sort(report.checks.begin(), report.checks.end(),
            [](const VerificationCheck& a, const VerificationCheck& b) { return a.name < b.name; });
  return report;
}

}  // namespace annulus
