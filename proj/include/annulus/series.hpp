#pragma once

#include <complex>
#include <vector>

namespace annulus {

using Complex = std::complex<double>;

/// Truncated Laurent-log series of a complex harmonic function on a ring
/// domain around the origin:
///
///   h(z) = a0 log|z| + b0 + sum_{0 < |n| <= N} (a[n] z^n + b[n] conj(z)^{-n})
///
/// On the circle |z| = rho the n-th term is (a[n] rho^n + b[n] rho^{-n}) e^{in theta},
/// so every angular mode is carried by exactly one coefficient pair. The pair
/// at n = 0 holds the log coefficient a0 and the constant b0.
class HarmonicSeries {
 public:
  HarmonicSeries() : HarmonicSeries(0) {}
  explicit HarmonicSeries(int order);

  int order() const noexcept { return order_; }

  /// Coefficient of z^n; a(0) is the log|z| coefficient.
  Complex a(int n) const;
  /// Coefficient of conj(z)^{-n}; b(0) is the constant term.
  Complex b(int n) const;
  Complex log_coeff() const { return a(0); }
  Complex constant() const { return b(0); }

  HarmonicSeries& set_a(int n, Complex value);
  HarmonicSeries& set_b(int n, Complex value);

  /// Same function, stored with a larger truncation order.
  HarmonicSeries with_order(int order) const;

  /// Radial amplitude of mode n on C_rho: a[n] rho^n + b[n] rho^{-n}
  /// (a0 log rho + b0 for n = 0), and its first two rho-derivatives.
  Complex mode_amplitude(int n, double rho) const;
  Complex mode_amplitude_d1(int n, double rho) const;
  Complex mode_amplitude_d2(int n, double rho) const;

  bool operator==(const HarmonicSeries& other) const = default;

 private:
  std::size_t slot(int n) const;

  int order_;
  std::vector<Complex> a_;
  std::vector<Complex> b_;
};

/// Round annulus A(1, R).
class Annulus {
 public:
  explicit Annulus(double outer_radius);
  double outer_radius() const noexcept { return outer_radius_; }
  double modulus() const;

 private:
  double outer_radius_;
};

struct PolarPoint {
  double rho;
  double theta;
};

struct Derivatives {
  Complex h_rho;
  Complex h_theta;
  Complex h_z;
  Complex h_zbar;
};

Complex evaluate(const HarmonicSeries& h, PolarPoint p);
Derivatives derivatives(const HarmonicSeries& h, PolarPoint p);

/// |h_z|^2 - |h_zbar|^2, cross-checked against Im(conj(h_rho) h_theta) / rho.
double jacobian(const HarmonicSeries& h, PolarPoint p);

/// |h_rho|^2 + |h_theta|^2 / rho^2, cross-checked against 2(|h_z|^2 + |h_zbar|^2).
double grad_norm_sq(const HarmonicSeries& h, PolarPoint p);

/// h^lambda(z) = (z + lambda / conj(z)) / (1 + lambda), -1 < lambda <= 1.
HarmonicSeries extremal_map(double lambda);

HarmonicSeries identity_map();

/// lambda = (R^2 - R R*) / (R R* - 1): the extremal map with outer mean radius R*.
double lambda_from_radii(double R, double R_star);

HarmonicSeries scale_rotate(const HarmonicSeries& h, Complex alpha);

/// Smallest admissible lambda is -1 + kLambdaGuard.
inline constexpr double kLambdaGuard = 1e-9;
void require_lambda(double lambda);

}  // namespace annulus
