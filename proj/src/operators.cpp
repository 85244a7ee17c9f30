#include "annulus/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "annulus/error.hpp"

namespace annulus {

namespace {

constexpr double kNormalizationTol = 1e-12;

double shifted_square(double lambda, double rho) {
  const double s = rho * rho + lambda;
  if (!(s > 0.0)) {
    throw Error(ErrorKind::SingularPoint, "rho^2 + lambda <= 0 at rho=" + std::to_string(rho));
  }
  return s;
}

}  // namespace

LambdaOperator::LambdaOperator(double lambda) : lambda_(lambda) { require_lambda(lambda); }

double LambdaOperator::apply(RadialJet jet, double rho) const {
  const double s = shifted_square(lambda_, rho);
  return jet.d2 + (3.0 * lambda_ - rho * rho) / (rho * s) * jet.d1 - 8.0 * lambda_ / (s * s) * jet.value;
}

double LambdaOperator::apply(const RadialProfile& p, double rho) const { return apply(p.jet(rho), rho); }

double L_apply(const LambdaOperator& op, const RadialProfile& p, double rho) { return op.apply(p, rho); }

double L_divergence(const LambdaOperator& op, const RadialProfile& p, double rho, double step) {
  const double lambda = op.lambda();
  const auto quotient = [&](double r) { return p.value(r) / shifted_square(lambda, r); };
  const auto flux = [&](double r) {
    const double slope = (quotient(r + step) - quotient(r - step)) / (2.0 * step);
    return r * r * r * slope;
  };
  return shifted_square(lambda, rho) / (rho * rho * rho) * (flux(rho + step) - flux(rho - step)) / (2.0 * step);
}

double L_divergence_check(const LambdaOperator& op, const RadialProfile& p, double rho, double step) {
  return std::abs(L_divergence(op, p, rho, step) - op.apply(p, rho));
}

double IdentitySides::residual() const { return std::abs(lhs - rhs); }

IdentitySides identity_energy_form(const HarmonicSeries& h, double lambda, double rho, const QuadratureConfig& cfg) {
  const LambdaOperator op(lambda);
  const double s = shifted_square(lambda, rho);
  const double weight = (rho * rho - lambda) / s;
  const double weight_d1 = 4.0 * lambda * rho / (s * s);
  const Ring ring(h, rho, cfg);
  const double mean = ring.mean([&](Complex v, Complex r, Complex t) {
    const double energy = std::norm(r) + std::norm(t) / (rho * rho);
    const double radial = weight_d1 * std::norm(v) + weight * 2.0 * std::real(std::conj(v) * r);
    return energy - radial / rho;
  });
  return {op.apply(U_closed(h), rho), 2.0 * mean};
}

IdentitySides identity_square_form(const HarmonicSeries& h, double lambda, double rho, const QuadratureConfig& cfg) {
  const LambdaOperator op(lambda);
  const double s = shifted_square(lambda, rho);
  const Ring ring(h, rho, cfg);
  const double mean = ring.mean([&](Complex v, Complex r, Complex t) {
    const Complex scaled_d1 = rho * r / s + v * (lambda - rho * rho) / (s * s);
    return std::norm(t) - std::norm(v) + s * s * std::norm(scaled_d1);
  });
  return {op.apply(U_closed(h), rho), 2.0 * mean / (rho * rho)};
}

double identity_uc3_residual(const HarmonicSeries& h, double lambda, double rho, const QuadratureConfig& cfg) {
  return identity_energy_form(h, lambda, rho, cfg).residual();
}

double identity_uc4_residual(const HarmonicSeries& h, double lambda, double rho, const QuadratureConfig& cfg) {
  return identity_square_form(h, lambda, rho, cfg).residual();
}

double K_weight(double lambda, double R, double rho) {
  return rho * (R * R - rho * rho) / shifted_square(lambda, rho);
}

double K_quadrature(const RadialProfile& p, double lambda, double R, const QuadratureConfig& cfg) {
  Annulus{R};
  const LambdaOperator op(lambda);
  return radial_integrate([&](double rho) { return K_weight(lambda, R, rho) * op.apply(p, rho); }, 1.0, R, cfg);
}

double K_quadrature(const HarmonicSeries& h, double lambda, double R, const QuadratureConfig& cfg) {
  return K_quadrature(U_closed(h), lambda, R, cfg);
}

double K_endpoint(const RadialProfile& p, double lambda, double R) {
  Annulus{R};
  require_lambda(lambda);
  const RadialJet inner = p.jet(1.0);
  const double outer = p.value(R);
  const double R2 = R * R;
  const double one_plus = 1.0 + lambda;
  return 2.0 * R2 / (R2 + lambda) * outer - 2.0 * (lambda * R2 + 1.0) / (one_plus * one_plus) * inner.value -
         (R2 - 1.0) / one_plus * inner.d1;
}

double K_endpoint(const HarmonicSeries& h, double lambda, double R) { return K_endpoint(U_closed(h), lambda, R); }

double variance_subsolution_min(const HarmonicSeries& h, double lambda, std::span<const double> rho_grid) {
  const LambdaOperator op(lambda);
  const RadialProfile v = V_closed(h);
  double lowest = std::numeric_limits<double>::infinity();
  for (double rho : rho_grid) lowest = std::min(lowest, op.apply(v, rho));
  return lowest;
}

double variance_mode_lower_bound(const HarmonicSeries& h, double rho) {
  double sum = 0.0;
  for (int n = -h.order(); n <= h.order(); ++n) {
    if (n == 0) continue;
    const double dn = n;
    sum += (dn * dn - 1.0) * std::norm(h.mode_amplitude(n, rho));
  }
  return 2.0 * sum / (rho * rho);
}

double lambda_from_speed(double speed) {
  if (!(speed >= 0.0) || !std::isfinite(speed)) {
    throw Error(ErrorKind::OutOfClass, "initial speed " + std::to_string(speed) + " is negative");
  }
  return (1.0 - speed) / (1.0 + speed);
}

SpeedBound mean0_bound_check(const HarmonicSeries& h, double s) {
  if (!(s >= 1.0)) throw Error(ErrorKind::ParameterDomain, "s must be >= 1");
  if (std::abs(h.constant()) > kNormalizationTol) {
    throw Error(ErrorKind::Precondition, "inner-circle mean must vanish (b0 = 0)");
  }
  const RadialProfile u = U_closed(h);
  if (std::abs(u.value(1.0) - 1.0) > kNormalizationTol) {
    throw Error(ErrorKind::Precondition, "quadratic mean on the inner circle must be 1");
  }
  const double lambda = lambda_from_speed(initial_speed(h));
  return {std::sqrt(u.value(s)), (s * s + lambda) / ((1.0 + lambda) * s), lambda};
}

}  // namespace annulus
