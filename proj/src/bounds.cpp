#include "annulus/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "annulus/error.hpp"
#include "annulus/means.hpp"
#include "annulus/operators.hpp"
#include "annulus/sampling.hpp"

namespace annulus {

namespace {

double require_R(double R) { return Annulus{R}.outer_radius(); }

double square(double x) { return x * x; }

// (n - 1) |a_n + b_n|^2 summed over n != 0.
double boundary_mode_sum(const HarmonicSeries& h) {
  double sum = 0.0;
  for (int n = -h.order(); n <= h.order(); ++n) {
    if (n != 0) sum += (n - 1.0) * std::norm(h.a(n) + h.b(n));
  }
  return sum;
}

}  // namespace

double nitsche_bound(double R) { return 0.5 * (require_R(R) + 1.0 / R); }

double kalaj_bound(double R) { return 1.0 + 0.5 * square(std::log(require_R(R))); }

double weitsman_bound(double R) { return 1.0 + 0.5 * square(std::log(require_R(R)) / R); }

bool condition_modulus(double R) {
  // A few ulps of slack so that R = exp(1.5) itself passes.
  return std::log(require_R(R)) <= 1.5 + 4.0 * std::numeric_limits<double>::epsilon();
}

double small_modulus_condition(double R, double lambda) {
  require_R(R);
  require_lambda(lambda);
  return R * R - 1.0 - (R * R - lambda) * std::log(R);
}

double comparison_weight(double R, double lambda, double rho) {
  require_R(R);
  require_lambda(lambda);
  if (!(rho >= 1.0 && rho <= R)) throw Error(ErrorKind::ParameterDomain, "rho must lie in [1, R]");
  return (R * R - lambda) * std::log(R / rho) + (R * R - rho * rho) * lambda / (rho * rho);
}

double phi(double R) {
  require_R(R);
  const double R2 = R * R;
  const double L = std::log(R);
  return 4.0 * R2 * (R2 - 3.0) * L * L + 8.0 * R2 * (R2 - 1.0) * L - (R2 - 1.0) * (R2 * R2 - 1.0);
}

double phi_scaled_second_derivative(double R) {
  require_R(R);
  const double R2 = R * R;
  const double L = std::log(R);
  const double numerator =
      -2.0 * R2 * R2 * R2 - 72.0 * R2 * L * L + 22.0 * R2 + (72.0 * R2 - 8.0 * R2 * R2) * L - 20.0;
  return numerator / (R2 * R2 * R2);
}

ModeForm mode_form_coefficients(int n, double R) {
  require_R(R);
  const double R2 = R * R;
  const double dn = n;
  const double shared = (R2 - 3.0) * (R2 + 1.0);
  return {4.0 * std::pow(R, 2 * n + 2) + shared - 4.0 * dn * (R2 * R2 - 1.0),
          4.0 * std::pow(R, 2 - 2 * n) + shared,
          -(R2 - 1.0) * (2.0 * dn * (R2 + 1.0) - R2 - 3.0)};
}

double mode_discriminant(int n, double R) {
  if (n < 2) throw Error(ErrorKind::ParameterDomain, "mode discriminant needs n >= 2");
  const ModeForm f = mode_form_coefficients(n, R);
  const double R2 = R * R;
  return f.A * (R2 - 3.0) * (R2 + 1.0) - f.C * f.C;
}

double mode_discriminant_expanded(double n, double R) {
  require_R(R);
  const double R2 = R * R;
  const double R4 = R2 * R2;
  const double n2 = n * n;
  return 4.0 * (std::pow(R, 2.0 * n + 2.0) * (R4 - 2.0 * R2 - 3.0) - n2 * R4 * R4 + (4.0 * n - 2.0) * R4 * R2 +
                2.0 * n2 * R4 + (6.0 - 4.0 * n) * R2 - n2);
}

double mode_discriminant_n2_factored(double R) {
  require_R(R);
  const double R2 = R * R;
  const double R4 = R2 * R2;
  return 4.0 * (R2 - 1.0) * (R4 * R4 - 5.0 * R4 * R2 - 2.0 * R4 + 6.0 * R2 + 4.0);
}

double IdentityCheck::residual() const { return std::abs(lhs - rhs); }

IdentityCheck per_mode_identity(const HarmonicSeries& h, int n, double R, const QuadratureConfig& cfg) {
  if (n < 1) throw Error(ErrorKind::ParameterDomain, "per-mode identity needs n >= 1");
  const Complex a = h.a(n);
  const Complex b = h.b(n);
  const double weighted = K_quadrature(U_mode(h, n), 1.0, R, cfg);
  const ModeForm f = mode_form_coefficients(n, R);
  const double form = f.A * std::norm(a) + f.B * std::norm(b) + 2.0 * f.C * std::real(a * std::conj(b));
  return {weighted - (R * R - 1.0) * (n - 1.0) * std::norm(a + b), form / (2.0 * (R * R + 1.0))};
}

IdentityCheck boundary_identity(const HarmonicSeries& h, const QuadratureConfig& cfg) {
  const kernels::RingMoments m = Ring(h, 1.0, cfg).moments();
  return {m.mean_conj_h_theta.imag() - m.mean_abs2_h + std::norm(m.mean_h), boundary_mode_sum(h)};
}

IdentityCheck variance_functional_check(const HarmonicSeries& h, double R, const QuadratureConfig& cfg) {
  if (!(require_R(R) > std::numbers::e)) throw Error(ErrorKind::ParameterDomain, "needs R > e");
  return {K_quadrature(V_closed(h), 1.0, R, cfg), (R * R - 1.0) * boundary_mode_sum(h)};
}

SchottkyReport schottky_check(const HarmonicSeries& h, double R, const QuadratureConfig& cfg) {
  SchottkyReport report;
  report.R = require_R(R);
  report.area_floor = std::numbers::pi * (R * R - 1.0);
  report.coefficient_floor = R * R - 1.0;
  for (int n = -h.order(); n <= h.order(); ++n) {
    if (h.b(n) != Complex{}) {
      report.reason = "not conformal: b[" + std::to_string(n) + "] != 0";
      return report;
    }
  }
  if (h.a(0) != Complex{}) {
    report.reason = "log coefficient a0 != 0";
    return report;
  }
  const Ring inner(h, 1.0, cfg);
  double deviation = 0.0;
  for (std::size_t k = 0; k < inner.size(); ++k) deviation = std::max(deviation, std::abs(std::abs(inner.h(k)) - 1.0));
  if (deviation > kUnitCircleTolerance) {
    report.reason = "|h| deviates from 1 on the unit circle by " + std::to_string(deviation);
    return report;
  }
  report.applicable = true;
  report.mean_outer_radius = mean_outer_radius(h, R);
  for (int n = -h.order(); n <= h.order(); ++n) {
    if (n != 0) report.coefficient_sum += std::norm(h.a(n)) * (std::pow(R, 2 * n) - 1.0);
  }
  report.image_area = 0.5 * dirichlet_energy(h, 1.0, R, cfg);
  report.area_crosscheck = std::abs(enclosed_area(h, R, cfg) - enclosed_area(h, 1.0, cfg) - report.image_area);
  report.radius_ok = report.mean_outer_radius >= R - kGateTolerance;
  report.area_ok = report.image_area >= report.area_floor - 1e-6;
  return report;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

BoundReport theorem_gate(const HarmonicSeries& h, double R) {
  BoundReport report;
  report.R = require_R(R);
  report.modulus = std::log(R);
  report.class_D = is_class_D(h);
  report.class_N = is_class_N(h);
  report.nitsche = nitsche_bound(R);

  const RadialProfile u = U_closed(h);
  const RadialJet inner = u.jet(1.0);
  if (!(inner.value > 0.0)) {
    report.theorem = "none";
    return report;
  }
  report.measured = std::sqrt(u.value(R) / inner.value);
  report.speed = inner.d1 / (2.0 * inner.value);

  const bool speed_gate = report.class_D && report.speed >= 0.0;
  if (speed_gate) {
    report.lambda = lambda_from_speed(report.speed);
    report.applicable.push_back("initial-speed");
  }
  if (report.class_D) report.applicable.push_back("class-D");
  if (report.class_N) report.applicable.push_back("class-N");
  if (condition_modulus(R)) report.applicable.push_back("modulus");

  if (report.applicable.empty()) {
    report.theorem = "none";
    return report;
  }
  report.theorem = report.applicable.front();
  report.bound = speed_gate ? (R * R + report.lambda) / ((1.0 + report.lambda) * R) : report.nitsche;
  report.margin = report.measured - report.bound;
  report.verdict = report.margin >= -kGateTolerance ? Verdict::Pass : Verdict::Fail;
  return report;
}

UniquenessReport uniqueness_probe(double R, double eps_min, double eps_max, int count) {
  UniquenessReport report;
  report.R = require_R(R);
  report.critical = nitsche_bound(R);
  if (!(eps_min > 0.0 && eps_min < eps_max) || count < 2) {
    throw Error(ErrorKind::ParameterDomain, "uniqueness probe needs 0 < eps_min < eps_max and count >= 2");
  }
  report.equality_gap = theorem_gate(perturb_extremal(1.0, 2, 0.0, true), R).margin;

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  report.gaps_positive = true;
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    const double eps = eps_min * std::pow(eps_max / eps_min, t);
    const BoundReport gate = theorem_gate(perturb_extremal(1.0, 2, eps, true), R);
    const UniquenessSample s{eps, gate.measured, gate.bound, gate.margin, gate.measured - report.critical};
    report.samples.push_back(s);
    if (!(s.gap > 0.0) || gate.theorem != "initial-speed") {
      report.gaps_positive = false;
      continue;
    }
    const double x = std::log(eps);
    const double y = std::log(s.gap);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  if (report.gaps_positive) {
    const double k = count;
    report.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  }
  report.class_flag_trips = !is_class_D(perturb_extremal(1.0, 0, eps_min, false));
  return report;
}

}  // namespace annulus
