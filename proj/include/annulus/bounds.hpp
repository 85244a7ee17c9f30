#pragma once

#include <string>
#include <vector>

#include "annulus/quadrature.hpp"
#include "annulus/series.hpp"

namespace annulus {

// Lower bounds for the mean outer radius R* of a harmonic map from A(1, R).
double nitsche_bound(double R);   // (R + 1/R) / 2
double kalaj_bound(double R);     // 1 + log^2(R) / 2
double weitsman_bound(double R);  // 1 + log^2(R) / (2 R^2)

/// True when log R <= 3/2.
bool condition_modulus(double R);

/// R^2 - 1 - (R^2 - lambda) log R; nonnegative values admit the small-modulus argument.
double small_modulus_condition(double R, double lambda);

/// (R^2 - lambda) log(R / rho) + (R^2 - rho^2) lambda / rho^2, nonnegative for 1 <= rho <= R.
double comparison_weight(double R, double lambda, double rho);

/// phi(R) = 4R^2(R^2-3) log^2 R + 8R^2(R^2-1) log R - (R^2-1)(R^4-1).
double phi(double R);
/// Closed form of d^2/dR^2 (R^-4 phi(R)).
double phi_scaled_second_derivative(double R);

/// Coefficients of the quadratic form in (a_n, b_n) left after weighting
/// L[U_n] at lambda = 1 over [1, R].
struct ModeForm {
  double A;
  double B;
  double C;
};
ModeForm mode_form_coefficients(int n, double R);

/// A_n (R^2-3)(R^2+1) - C_n^2, for n >= 2.
double mode_discriminant(int n, double R);
/// The same polynomial expanded in powers of R, accepting real n.
double mode_discriminant_expanded(double n, double R);
/// n = 2 factorization 4(R^2-1)(R^8 - 5R^6 - 2R^4 + 6R^2 + 4).
double mode_discriminant_n2_factored(double R);

struct IdentityCheck {
  double lhs;
  double rhs;
  double residual() const;
};

/// Weighted integral of L[U_n] (lambda = 1) minus (R^2-1)(n-1)|a_n+b_n|^2, against
/// (A|a_n|^2 + B|b_n|^2 + 2C Re(a_n conj(b_n))) / (2(R^2+1)).
IdentityCheck per_mode_identity(const HarmonicSeries& h, int n, double R, const QuadratureConfig& cfg);

/// On the unit circle: Im mean(conj(h) h_theta) - mean|h|^2 + |mean h|^2, against
/// sum over n != 0 of (n-1)|a_n + b_n|^2.
IdentityCheck boundary_identity(const HarmonicSeries& h, const QuadratureConfig& cfg);

/// K[V] at lambda = 1 against (R^2-1) sum (n-1)|a_n+b_n|^2; lhs >= rhs for R > e.
IdentityCheck variance_functional_check(const HarmonicSeries& h, double R, const QuadratureConfig& cfg);

struct SchottkyReport {
  bool applicable = false;
  std::string reason;
  double R = 0.0;
  double mean_outer_radius = 0.0;
  /// Area of the image annulus, half the Dirichlet energy for a conformal map.
  double image_area = 0.0;
  double area_floor = 0.0;  // pi (R^2 - 1)
  /// sum |a_n|^2 (R^{2n} - 1) against R^2 - 1.
  double coefficient_sum = 0.0;
  double coefficient_floor = 0.0;
  /// |enclosed area difference - image_area|, a cross-check of the area.
  double area_crosscheck = 0.0;
  bool radius_ok = false;
  bool area_ok = false;
};

inline constexpr double kUnitCircleTolerance = 1e-6;

/// Conformal series (b_n = 0, a0 = b0 = 0) with |h| = 1 on C_1 within
/// kUnitCircleTolerance: the image annulus is at least as thick as A(1, R).
SchottkyReport schottky_check(const HarmonicSeries& h, double R, const QuadratureConfig& cfg = {});

enum class Verdict { Pass, Fail, NotApplicable };
std::string to_string(Verdict v);

struct BoundReport {
  double R = 0.0;
  double modulus = 0.0;
  bool class_D = false;
  bool class_N = false;
  /// "initial-speed", "class-D", "class-N", "modulus" or "none".
  std::string theorem;
  /// Every gate that holds, strongest first.
  std::vector<std::string> applicable;
  double bound = 0.0;
  double nitsche = 0.0;
  double measured = 0.0;
  double margin = 0.0;
  double speed = 0.0;
  double lambda = 0.0;
  Verdict verdict = Verdict::NotApplicable;
};

inline constexpr double kGateTolerance = 1e-9;

/// Measured R* = sqrt(U(R) / U(1)) against the strongest bound that applies.
BoundReport theorem_gate(const HarmonicSeries& h, double R);

struct UniquenessSample {
  double eps;
  double measured;
  double bound;
  double gap;          // measured - bound at the measured initial speed
  double nitsche_gap;  // measured - (R + 1/R) / 2
};

struct UniquenessReport {
  double R = 0.0;
  double critical = 0.0;
  double equality_gap = 0.0;  // eps = 0
  std::vector<UniquenessSample> samples;
  double slope = 0.0;  // least-squares log-log slope of gap against eps
  bool gaps_positive = false;
  bool class_flag_trips = false;  // perturbing b0 leaves the class
};

/// Perturbs h^1 by eps z^2 (class-D, renormalized) for eps log-spaced in
/// [eps_min, eps_max] and measures how far R* rises above the bound.
UniquenessReport uniqueness_probe(double R, double eps_min = 1e-4, double eps_max = 1e-2, int count = 9);

}  // namespace annulus
