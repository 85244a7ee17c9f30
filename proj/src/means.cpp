#include "annulus/means.hpp"

#include <cmath>
#include <memory>
#include <utility>
#include <vector>

#include "annulus/error.hpp"

namespace annulus {

namespace {

RadialJet mode_jet(const HarmonicSeries& h, int n, double rho) {
  const Complex c = h.mode_amplitude(n, rho);
  const Complex c1 = h.mode_amplitude_d1(n, rho);
  const Complex c2 = h.mode_amplitude_d2(n, rho);
  return {std::norm(c), 2.0 * std::real(std::conj(c) * c1), 2.0 * (std::norm(c1) + std::real(std::conj(c) * c2))};
}

RadialProfile mode_sum(std::string label, const HarmonicSeries& h, bool include_zero) {
  auto series = std::make_shared<const HarmonicSeries>(h);
  return RadialProfile(std::move(label), [series, include_zero](double rho) {
    RadialJet sum{0.0, 0.0, 0.0};
    for (int n = -series->order(); n <= series->order(); ++n) {
      if (n == 0 && !include_zero) continue;
      const RadialJet j = mode_jet(*series, n, rho);
      sum.value += j.value;
      sum.d1 += j.d1;
      sum.d2 += j.d2;
    }
    return sum;
  });
}

}  // namespace

RadialProfile::RadialProfile(std::string label, JetFn jet) : label_(std::move(label)), jet_(std::move(jet)) {}

RadialProfile power_profile(double coefficient, double power) {
  return RadialProfile("power", [coefficient, power](double rho) {
    return RadialJet{coefficient * std::pow(rho, power), coefficient * power * std::pow(rho, power - 1.0),
                     coefficient * power * (power - 1.0) * std::pow(rho, power - 2.0)};
  });
}

RadialProfile U_mode(const HarmonicSeries& h, int n) {
  if (n < -h.order() || n > h.order()) {
    throw Error(ErrorKind::Index, "mode " + std::to_string(n) + " exceeds order " + std::to_string(h.order()));
  }
  auto series = std::make_shared<const HarmonicSeries>(h);
  return RadialProfile("U_" + std::to_string(n), [series, n](double rho) { return mode_jet(*series, n, rho); });
}

RadialProfile U_closed(const HarmonicSeries& h) { return mode_sum("U", h, true); }

RadialProfile V_closed(const HarmonicSeries& h) { return mode_sum("V", h, false); }

double V_second_derivative_termwise(const HarmonicSeries& h, double rho) {
  double sum = 0.0;
  for (int n = -h.order(); n <= h.order(); ++n) {
    if (n == 0) continue;
    const double dn = n;
    const double grow = std::norm(h.a(n)) == 0.0 ? 0.0 : std::norm(h.a(n)) * std::pow(rho, 2 * n);
    const double decay = std::norm(h.b(n)) == 0.0 ? 0.0 : std::norm(h.b(n)) * std::pow(rho, -2 * n);
    sum += dn * (2.0 * dn - 1.0) * grow + dn * (2.0 * dn + 1.0) * decay;
  }
  return 2.0 * sum / (rho * rho);
}

Complex inner_mean(const HarmonicSeries& h) { return h.constant(); }

Complex normal_mean_coeff(const HarmonicSeries& h) { return h.log_coeff(); }

bool is_class_D(const HarmonicSeries& h, double tol) { return std::abs(h.constant()) <= tol; }

bool is_class_N(const HarmonicSeries& h, double tol) { return std::abs(h.log_coeff()) <= tol; }

double initial_speed(const HarmonicSeries& h) {
  const RadialJet u = U_closed(h).jet(1.0);
  if (!(u.value > 0.0)) throw Error(ErrorKind::Degenerate, "U(1) = 0: the inner circle collapses");
  return u.d1 / (2.0 * std::sqrt(u.value));
}

double mean_outer_radius(const HarmonicSeries& h, double R) {
  Annulus{R};
  return std::sqrt(U_closed(h).value(R));
}

}  // namespace annulus
