#pragma once

#include <functional>

#include "annulus/kernels.hpp"
#include "annulus/series.hpp"

namespace annulus {

struct QuadratureConfig {
  /// Angular trapezoid nodes; 0 selects max(256, 4N + 8) for the series at hand.
  int angular_nodes = 0;
  /// Radial Gauss-Legendre nodes per unit of log(rho).
  int radial_nodes = 64;
  int refinement = 2;
  double rtol = 1e-9;
  /// Absolute floor for the refinement test, for integrands that cancel to roundoff.
  double atol = 1e-10;

  /// Node count used for a series of the given order. Throws if an explicit
  /// count is below 4N + 4, where products of modes stop being integrated exactly.
  std::size_t angular_nodes_for(int order) const;
  void validate() const;
};

/// h, h_rho and h_theta sampled at the equispaced nodes of one circle.
class Ring {
 public:
  Ring(const HarmonicSeries& h, double rho, const QuadratureConfig& cfg);
  Ring(const HarmonicSeries& h, double rho, std::size_t nodes, const kernels::KernelSet& kernels);

  double rho() const noexcept { return rho_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double theta(std::size_t k) const;
  Complex h(std::size_t k) const { return samples_.at(kernels::kValue, k); }
  Complex h_rho(std::size_t k) const { return samples_.at(kernels::kRadial, k); }
  Complex h_theta(std::size_t k) const { return samples_.at(kernels::kAngular, k); }
  const kernels::RingMoments& moments() const noexcept { return moments_; }

  /// Trapezoid mean of an arbitrary pointwise expression in (h, h_rho, h_theta).
  template <class F>
  auto mean(F&& f) const {
    using R = decltype(f(Complex{}, Complex{}, Complex{}));
    R sum{};
    for (std::size_t k = 0; k < size(); ++k) sum += f(h(k), h_rho(k), h_theta(k));
    return sum / static_cast<double>(size());
  }

 private:
  double rho_;
  kernels::RingSamples samples_;
  kernels::RingMoments moments_;
};

kernels::RingCoefficients ring_coefficients(const HarmonicSeries& h, double rho);

using PointFunction = std::function<Complex(PolarPoint)>;

/// Normalized mean (1 / 2 pi rho) of f over C_rho by the periodic trapezoid rule.
Complex circular_mean(const PointFunction& f, double rho, const QuadratureConfig& cfg);

double quadratic_mean_numeric(const HarmonicSeries& h, double rho, const QuadratureConfig& cfg);

/// Winding number of h around 0 along C_rho.
int winding_number(const HarmonicSeries& h, double rho, const QuadratureConfig& cfg);

/// Area enclosed by the image curve h(C_rho): pi times the mean of Im(conj(h) h_theta).
double enclosed_area(const HarmonicSeries& h, double rho, const QuadratureConfig& cfg);

/// Integral of ||Dh||^2 over A(rho1, rho2).
double dirichlet_energy(const HarmonicSeries& h, double rho1, double rho2, const QuadratureConfig& cfg);

/// Composite Gauss-Legendre integral of g over [a, b], with panels uniform in
/// log(rho) and graded toward both endpoints. Throws Nonconvergence when
/// refining the panels changes the result by more than cfg.rtol times the
/// integral of |g| plus cfg.atol.
double radial_integrate(const std::function<double(double)>& g, double a, double b, const QuadratureConfig& cfg);

}  // namespace annulus
