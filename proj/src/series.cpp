#include "annulus/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "annulus/error.hpp"

namespace annulus {

namespace {

constexpr double kConsistencyTol = 1e-12;

void require_point(PolarPoint p) {
  if (!(p.rho > 0.0) || !std::isfinite(p.rho) || !std::isfinite(p.theta)) {
    throw Error(ErrorKind::ParameterDomain, "polar point needs finite rho > 0, got rho=" + std::to_string(p.rho));
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex require_finite(Complex z, const char* what) {
  if (!finite(z)) throw Error(ErrorKind::NumericOverflow, what);
  return z;
}

// c * rho^k, skipping the power when c vanishes so that 0 * inf never appears.
Complex scaled_power(Complex c, double rho, int k) {
  if (c == Complex{}) return {};
  return c * std::pow(rho, k);
}

}  // namespace

HarmonicSeries::HarmonicSeries(int order)
    : order_(order),
      a_(static_cast<std::size_t>(2 * std::max(order, 0) + 1)),
      b_(static_cast<std::size_t>(2 * std::max(order, 0) + 1)) {
  if (order < 0) throw Error(ErrorKind::ParameterDomain, "series order must be >= 0");
}

std::size_t HarmonicSeries::slot(int n) const {
  if (n < -order_ || n > order_) {
    throw Error(ErrorKind::Index, "mode " + std::to_string(n) + " outside [-" + std::to_string(order_) + ", " +
                                      std::to_string(order_) + "]");
  }
  return static_cast<std::size_t>(n + order_);
}

Complex HarmonicSeries::a(int n) const { return a_[slot(n)]; }
Complex HarmonicSeries::b(int n) const { return b_[slot(n)]; }

HarmonicSeries& HarmonicSeries::set_a(int n, Complex value) {
  if (!finite(value)) throw Error(ErrorKind::ParameterDomain, "coefficients must be finite");
  a_[slot(n)] = value;
  return *this;
}

HarmonicSeries& HarmonicSeries::set_b(int n, Complex value) {
  if (!finite(value)) throw Error(ErrorKind::ParameterDomain, "coefficients must be finite");
  b_[slot(n)] = value;
  return *this;
}

HarmonicSeries HarmonicSeries::with_order(int order) const {
  if (order < order_) throw Error(ErrorKind::ParameterDomain, "with_order cannot truncate");
  HarmonicSeries out(order);
  for (int n = -order_; n <= order_; ++n) {
    out.a_[out.slot(n)] = a(n);
    out.b_[out.slot(n)] = b(n);
  }
  return out;
}

Complex HarmonicSeries::mode_amplitude(int n, double rho) const {
  if (n == 0) return a(0) * std::log(rho) + b(0);
  return scaled_power(a(n), rho, n) + scaled_power(b(n), rho, -n);
}

Complex HarmonicSeries::mode_amplitude_d1(int n, double rho) const {
  if (n == 0) return a(0) / rho;
  const double dn = n;
  return dn * (scaled_power(a(n), rho, n - 1) - scaled_power(b(n), rho, -n - 1));
}

Complex HarmonicSeries::mode_amplitude_d2(int n, double rho) const {
  if (n == 0) return -a(0) / (rho * rho);
  const double dn = n;
  return dn * (dn - 1.0) * scaled_power(a(n), rho, n - 2) + dn * (dn + 1.0) * scaled_power(b(n), rho, -n - 2);
}

Annulus::Annulus(double outer_radius) : outer_radius_(outer_radius) {
  if (!(outer_radius > 1.0) || !std::isfinite(outer_radius)) {
    throw Error(ErrorKind::ParameterDomain, "annulus needs finite R > 1, got " + std::to_string(outer_radius));
  }
}

double Annulus::modulus() const { return std::log(outer_radius_); }

Complex evaluate(const HarmonicSeries& h, PolarPoint p) {
  require_point(p);
  Complex sum = h.mode_amplitude(0, p.rho);
  for (int n = 1; n <= h.order(); ++n) {
    sum += h.mode_amplitude(n, p.rho) * std::polar(1.0, n * p.theta);
    sum += h.mode_amplitude(-n, p.rho) * std::polar(1.0, -n * p.theta);
  }
  return require_finite(sum, "series value is not finite");
}

Derivatives derivatives(const HarmonicSeries& h, PolarPoint p) {
  require_point(p);
  const Complex i{0.0, 1.0};
  Complex h_rho = h.mode_amplitude_d1(0, p.rho);
  Complex h_theta{};
  for (int n = -h.order(); n <= h.order(); ++n) {
    if (n == 0) continue;
    const Complex e = std::polar(1.0, n * p.theta);
    h_rho += h.mode_amplitude_d1(n, p.rho) * e;
    h_theta += i * static_cast<double>(n) * h.mode_amplitude(n, p.rho) * e;
  }
  require_finite(h_rho, "radial derivative is not finite");
  require_finite(h_theta, "angular derivative is not finite");
  const Complex radial = (i / p.rho) * h_theta;
  return {h_rho, h_theta, 0.5 * std::polar(1.0, -p.theta) * (h_rho - radial),
          0.5 * std::polar(1.0, p.theta) * (h_rho + radial)};
}

double jacobian(const HarmonicSeries& h, PolarPoint p) {
  const Derivatives d = derivatives(h, p);
  const double wirtinger = std::norm(d.h_z) - std::norm(d.h_zbar);
  const double polar = std::imag(std::conj(d.h_rho) * d.h_theta) / p.rho;
  const double scale = std::norm(d.h_z) + std::norm(d.h_zbar);
  if (std::abs(wirtinger - polar) > kConsistencyTol * scale) {
    throw Error(ErrorKind::InternalInconsistency, "Jacobian forms disagree");
  }
  return wirtinger;
}

double grad_norm_sq(const HarmonicSeries& h, PolarPoint p) {
  const Derivatives d = derivatives(h, p);
  const double polar = std::norm(d.h_rho) + std::norm(d.h_theta) / (p.rho * p.rho);
  const double wirtinger = 2.0 * (std::norm(d.h_z) + std::norm(d.h_zbar));
  if (std::abs(wirtinger - polar) > kConsistencyTol * std::max(polar, wirtinger)) {
    throw Error(ErrorKind::InternalInconsistency, "gradient norm forms disagree");
  }
  return polar;
}

void require_lambda(double lambda) {
  if (!(lambda > -1.0 + kLambdaGuard) || !(lambda <= 1.0)) {
    throw Error(ErrorKind::ParameterDomain, "lambda must lie in (-1, 1], got " + std::to_string(lambda));
  }
}

HarmonicSeries extremal_map(double lambda) {
  require_lambda(lambda);
  HarmonicSeries h(1);
  h.set_a(1, 1.0 / (1.0 + lambda));
  h.set_b(1, lambda / (1.0 + lambda));
  return h;
}

HarmonicSeries identity_map() {
  HarmonicSeries h(1);
  h.set_a(1, 1.0);
  return h;
}

double lambda_from_radii(double R, double R_star) {
  Annulus{R};
  if (!std::isfinite(R_star)) throw Error(ErrorKind::ParameterDomain, "R* must be finite");
  const double denom = R * R_star - 1.0;
  if (!(denom > 0.0)) throw Error(ErrorKind::OutOfRange, "R R* <= 1 gives no admissible lambda");
  double lambda = (R * R - R * R_star) / denom;
  // Allow rounding slack at the Nitsche bound itself.
  if (lambda > 1.0 + 1e-12) {
    throw Error(ErrorKind::OutOfRange, "R* = " + std::to_string(R_star) + " lies below the Nitsche bound");
  }
  lambda = std::min(lambda, 1.0);
  require_lambda(lambda);
  return lambda;
}

HarmonicSeries scale_rotate(const HarmonicSeries& h, Complex alpha) {
  HarmonicSeries out(h.order());
  for (int n = -h.order(); n <= h.order(); ++n) {
    out.set_a(n, alpha * h.a(n));
    out.set_b(n, alpha * h.b(n));
  }
  return out;
}

}  // namespace annulus
