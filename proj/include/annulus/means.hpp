#pragma once

#include <functional>
#include <string>

#include "annulus/series.hpp"

namespace annulus {

/// Value and first two derivatives of a radial function at one point.
struct RadialJet {
  double value;
  double d1;
  double d2;
};

/// A real function of rho > 0 with closed-form first and second derivatives.
class RadialProfile {
 public:
  using JetFn = std::function<RadialJet(double)>;

  RadialProfile(std::string label, JetFn jet);

  RadialJet jet(double rho) const { return jet_(rho); }
  double value(double rho) const { return jet_(rho).value; }
  double deriv1(double rho) const { return jet_(rho).d1; }
  double deriv2(double rho) const { return jet_(rho).d2; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
  JetFn jet_;
};

/// c rho^p as a profile.
RadialProfile power_profile(double coefficient, double power);

/// U_n(rho) = |a[n] rho^n + b[n] rho^{-n}|^2, or |a0 log rho + b0|^2 for n = 0.
RadialProfile U_mode(const HarmonicSeries& h, int n);
/// Quadratic mean U = sum over all modes of U_n.
RadialProfile U_closed(const HarmonicSeries& h);
/// Variance V = sum of U_n over n != 0.
RadialProfile V_closed(const HarmonicSeries& h);

/// Second derivative of V from the expanded coefficient form
/// (2 / rho^2) sum [n(2n-1)|a_n|^2 rho^{2n} + n(2n+1)|b_n|^2 rho^{-2n}].
double V_second_derivative_termwise(const HarmonicSeries& h, double rho);

/// Limit of the circular mean of h at the inner circle (b0).
Complex inner_mean(const HarmonicSeries& h);
/// Limit of the circular mean of h_rho at the inner circle (a0).
Complex normal_mean_coeff(const HarmonicSeries& h);

inline constexpr double kClassTolerance = 1e-12;
bool is_class_D(const HarmonicSeries& h, double tol = kClassTolerance);
bool is_class_N(const HarmonicSeries& h, double tol = kClassTolerance);

/// d/drho sqrt(U) at rho = 1, i.e. U'(1) / (2 sqrt(U(1))).
double initial_speed(const HarmonicSeries& h);

/// sqrt(U(R)).
double mean_outer_radius(const HarmonicSeries& h, double R);

}  // namespace annulus
