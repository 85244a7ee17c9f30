#pragma once

#include <span>

#include "annulus/means.hpp"
#include "annulus/quadrature.hpp"
#include "annulus/series.hpp"

namespace annulus {

/// Second-order radial operator
///
///   L[P] = P'' + (3 lambda - rho^2) / (rho (rho^2 + lambda)) P' - 8 lambda / (rho^2 + lambda)^2 P,
///
/// equivalently ((rho^2 + lambda) / rho^3) d/drho [rho^3 d/drho (P / (rho^2 + lambda))].
/// It annihilates the quadratic mean of the extremal map h^lambda.
class LambdaOperator {
 public:
  explicit LambdaOperator(double lambda);
  double lambda() const noexcept { return lambda_; }
  double apply(const RadialProfile& p, double rho) const;
  double apply(RadialJet jet, double rho) const;

 private:
  double lambda_;
};

double L_apply(const LambdaOperator& op, const RadialProfile& p, double rho);

/// (rho^2 + lambda)^2 / rho^3 (rho^3 (p / (rho^2 + lambda)^2)')' by nested central differences.
double L_divergence(const LambdaOperator& op, const RadialProfile& p, double rho, double step);
/// |L_divergence - L_apply|; O(step^2).
double L_divergence_check(const LambdaOperator& op, const RadialProfile& p, double rho, double step);

struct IdentitySides {
  double lhs;
  double rhs;
  double residual() const;
};

/// L[U] against 2 mean(||Dh||^2 - (1/rho) d/drho((rho^2 - lambda)/(rho^2 + lambda) |h|^2)).
IdentitySides identity_energy_form(const HarmonicSeries& h, double lambda, double rho, const QuadratureConfig& cfg);
/// L[U] against (2/rho^2) mean(|h_theta|^2 - |h|^2 + (rho^2 + lambda)^2 |d/drho(rho h / (rho^2 + lambda))|^2).
IdentitySides identity_square_form(const HarmonicSeries& h, double lambda, double rho, const QuadratureConfig& cfg);

double identity_uc3_residual(const HarmonicSeries& h, double lambda, double rho, const QuadratureConfig& cfg);
double identity_uc4_residual(const HarmonicSeries& h, double lambda, double rho, const QuadratureConfig& cfg);

/// rho (R^2 - rho^2) / (rho^2 + lambda), the weight of the K functional.
double K_weight(double lambda, double R, double rho);

/// K[P] = integral over [1, R] of K_weight * L[P], by radial quadrature.
double K_quadrature(const RadialProfile& p, double lambda, double R, const QuadratureConfig& cfg);
double K_quadrature(const HarmonicSeries& h, double lambda, double R, const QuadratureConfig& cfg);

/// Closed form of K[P] from P(1), P'(1) and P(R):
/// 2R^2/(R^2+lambda) P(R) - 2(lambda R^2 + 1)/(1+lambda)^2 P(1) - (R^2-1)/(1+lambda) P'(1).
double K_endpoint(const RadialProfile& p, double lambda, double R);
double K_endpoint(const HarmonicSeries& h, double lambda, double R);

/// Minimum of L[V] over the grid.
double variance_subsolution_min(const HarmonicSeries& h, double lambda, std::span<const double> rho_grid);

/// (2 / rho^2) sum_{n != 0} (n^2 - 1) U_n(rho), a pointwise lower bound for L[V].
double variance_mode_lower_bound(const HarmonicSeries& h, double rho);

struct SpeedBound {
  double lhs;     // sqrt(U(s))
  double rhs;     // (s^2 + lambda) / ((1 + lambda) s)
  double lambda;  // from the initial speed (1 - lambda) / (1 + lambda)
};

/// Lambda matching an initial speed (1 - lambda)/(1 + lambda); speed must be >= 0.
double lambda_from_speed(double speed);

/// For h with b0 = 0 and U(1) = 1, compares sqrt(U(s)) with the extremal
/// profile of the same initial speed.
SpeedBound mean0_bound_check(const HarmonicSeries& h, double s);

}  // namespace annulus
