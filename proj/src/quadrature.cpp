#include "annulus/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <string>
#include <unordered_map>

#include <boost/math/quadrature/gauss.hpp>

#include "annulus/error.hpp"

namespace annulus {

namespace {

constexpr int kPanelPoints = 20;
// Geometric sub-panels inserted next to each endpoint.
constexpr int kGradingLevels = 8;
constexpr double kMinCircleModulus = 1e-9;

const kernels::RingNodes& nodes_for(std::size_t count) {
  thread_local std::unordered_map<std::size_t, std::unique_ptr<kernels::RingNodes>> cache;
  auto& slot = cache[count];
  if (!slot) slot = std::make_unique<kernels::RingNodes>(count);
  return *slot;
}

void require_radius(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw Error(ErrorKind::ParameterDomain, "circle radius must be finite and > 0, got " + std::to_string(rho));
  }
}

std::vector<double> panel_breaks(double a, double b, int nodes_per_unit, int refinement) {
  const bool logarithmic = a > 0.0;
  const double lo = logarithmic ? std::log(a) : a;
  const double hi = logarithmic ? std::log(b) : b;
  const double span = hi - lo;
  const int base = std::max(1, static_cast<int>(std::ceil(nodes_per_unit * span / kPanelPoints)));
  const int panels = base * refinement;
  const double width = span / panels;

  std::vector<double> t;
  t.push_back(lo);
  for (int level = kGradingLevels; level >= 1; --level) t.push_back(lo + width * std::ldexp(1.0, -level));
  for (int p = 1; p < panels; ++p) t.push_back(lo + width * p);
  for (int level = 1; level <= kGradingLevels; ++level) t.push_back(hi - width * std::ldexp(1.0, -level));
  t.push_back(hi);
  std::sort(t.begin(), t.end());

  std::vector<double> breaks;
  breaks.reserve(t.size());
  for (double x : t) breaks.push_back(logarithmic ? std::exp(x) : x);
  breaks.front() = a;
  breaks.back() = b;
  return breaks;
}

struct PanelSum {
  double integral = 0.0;
  double magnitude = 0.0;
};

PanelSum composite_gauss(const std::function<double(double)>& g, const std::vector<double>& breaks) {
  using Rule = boost::math::quadrature::gauss<double, kPanelPoints>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  PanelSum sum;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double center = 0.5 * (breaks[p] + breaks[p + 1]);
    const double half = 0.5 * (breaks[p + 1] - breaks[p]);
    double panel = 0.0;
    double panel_abs = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double left = g(center - half * x[i]);
      const double right = g(center + half * x[i]);
      panel += w[i] * (left + right);
      panel_abs += w[i] * (std::abs(left) + std::abs(right));
    }
    sum.integral += half * panel;
    sum.magnitude += half * panel_abs;
  }
  return sum;
}

}  // namespace

std::size_t QuadratureConfig::angular_nodes_for(int order) const {
  validate();
  const int minimum = 4 * order + 4;
  if (angular_nodes == 0) return static_cast<std::size_t>(std::max(256, 4 * order + 8));
  if (angular_nodes < minimum) {
    throw Error(ErrorKind::ParameterDomain, "angular nodes " + std::to_string(angular_nodes) +
                                                " below 4N+4 = " + std::to_string(minimum));
  }
  return static_cast<std::size_t>(angular_nodes);
}

void QuadratureConfig::validate() const {
  if (angular_nodes < 0) throw Error(ErrorKind::ParameterDomain, "angular nodes must be >= 0");
  if (radial_nodes < 32) throw Error(ErrorKind::ParameterDomain, "radial nodes per unit log must be >= 32");
  if (refinement < 2) throw Error(ErrorKind::ParameterDomain, "refinement factor must be >= 2");
  if (!(rtol > 0.0)) throw Error(ErrorKind::ParameterDomain, "refinement tolerance must be > 0");
  if (!(atol >= 0.0)) throw Error(ErrorKind::ParameterDomain, "absolute refinement floor must be >= 0");
}

kernels::RingCoefficients ring_coefficients(const HarmonicSeries& h, double rho) {
  kernels::RingCoefficients c;
  c.order = h.order();
  const std::size_t width = static_cast<std::size_t>(2 * h.order() + 1);
  for (std::size_t ch = 0; ch < kernels::kChannels; ++ch) {
    c.re[ch].assign(width, 0.0);
    c.im[ch].assign(width, 0.0);
  }
  for (int n = -h.order(); n <= h.order(); ++n) {
    const std::size_t k = static_cast<std::size_t>(n + h.order());
    const Complex value = h.mode_amplitude(n, rho);
    const Complex radial = h.mode_amplitude_d1(n, rho);
    const Complex angular = Complex{0.0, static_cast<double>(n)} * value;
    c.re[kernels::kValue][k] = value.real();
    c.im[kernels::kValue][k] = value.imag();
    c.re[kernels::kRadial][k] = radial.real();
    c.im[kernels::kRadial][k] = radial.imag();
    c.re[kernels::kAngular][k] = angular.real();
    c.im[kernels::kAngular][k] = angular.imag();
  }
  return c;
}

Ring::Ring(const HarmonicSeries& h, double rho, const QuadratureConfig& cfg)
    : Ring(h, rho, cfg.angular_nodes_for(h.order()), kernels::active_kernels()) {}

Ring::Ring(const HarmonicSeries& h, double rho, std::size_t nodes, const kernels::KernelSet& kernels) : rho_(rho) {
  require_radius(rho);
  const kernels::RingCoefficients coeffs = ring_coefficients(h, rho);
  kernels.eval_ring(coeffs, nodes_for(nodes), samples_);
  moments_ = kernels.ring_moments(samples_);
  if (!std::isfinite(moments_.mean_abs2_h) || !std::isfinite(moments_.mean_abs2_rho) ||
      !std::isfinite(moments_.mean_abs2_theta)) {
    throw Error(ErrorKind::NumericOverflow, "ring samples are not finite");
  }
}

double Ring::theta(std::size_t k) const {
  return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(size());
}

Complex circular_mean(const PointFunction& f, double rho, const QuadratureConfig& cfg) {
  require_radius(rho);
  const std::size_t count = cfg.angular_nodes_for(0);
  Complex sum{};
  for (std::size_t k = 0; k < count; ++k) {
    sum += f({rho, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count)});
  }
  return sum / static_cast<double>(count);
}

double quadratic_mean_numeric(const HarmonicSeries& h, double rho, const QuadratureConfig& cfg) {
  return Ring(h, rho, cfg).moments().mean_abs2_h;
}

int winding_number(const HarmonicSeries& h, double rho, const QuadratureConfig& cfg) {
  const Ring ring(h, rho, cfg);
  double min_modulus = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < ring.size(); ++k) min_modulus = std::min(min_modulus, std::abs(ring.h(k)));
  if (!(min_modulus > kMinCircleModulus)) {
    throw Error(ErrorKind::ZeroOnCircle, "h nearly vanishes on C_rho, rho=" + std::to_string(rho));
  }
  // (1 / 2 pi i) \oint dh / h = mean of h_theta / (i h).
  const Complex mean = ring.mean([](Complex v, Complex, Complex t) { return t / v; });
  const double turns = mean.imag();
  const double nearest = std::round(turns);
  if (std::abs(turns - nearest) >= 1e-6) {
    throw Error(ErrorKind::NonIntegerWinding, "winding integral " + std::to_string(turns) + " is not an integer");
  }
  return static_cast<int>(nearest);
}

double enclosed_area(const HarmonicSeries& h, double rho, const QuadratureConfig& cfg) {
  return std::numbers::pi * Ring(h, rho, cfg).moments().mean_conj_h_theta.imag();
}

double dirichlet_energy(const HarmonicSeries& h, double rho1, double rho2, const QuadratureConfig& cfg) {
  require_radius(rho1);
  if (!(rho1 < rho2)) throw Error(ErrorKind::ParameterDomain, "dirichlet_energy needs rho1 < rho2");
  const auto circle_integral = [&](double rho) {
    const kernels::RingMoments m = Ring(h, rho, cfg).moments();
    return 2.0 * std::numbers::pi * rho * (m.mean_abs2_rho + m.mean_abs2_theta / (rho * rho));
  };
  return radial_integrate(circle_integral, rho1, rho2, cfg);
}

double radial_integrate(const std::function<double(double)>& g, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::ParameterDomain, "radial_integrate needs finite a < b");
  }
  const PanelSum coarse = composite_gauss(g, panel_breaks(a, b, cfg.radial_nodes, 1));
  const PanelSum fine = composite_gauss(g, panel_breaks(a, b, cfg.radial_nodes, cfg.refinement));
  if (!std::isfinite(fine.integral)) throw Error(ErrorKind::NumericOverflow, "radial integrand is not finite");
  const double change = std::abs(fine.integral - coarse.integral);
  if (change > cfg.rtol * fine.magnitude + cfg.atol) {
    throw Error(ErrorKind::Nonconvergence, "refinement changed the integral by " + std::to_string(change) +
                                               " (scale " + std::to_string(fine.magnitude) + ")");
  }
  return fine.integral;
}

}  // namespace annulus
