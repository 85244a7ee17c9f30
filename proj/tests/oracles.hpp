#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <complex>
#include <functional>

#include "annulus/series.hpp"

namespace oracle {

using LComplex = std::complex<long double>;

/// Direct term-by-term summation of a0 log|z| + b0 + sum (a_n z^n + b_n conj(z)^-n)
/// in long double, with z built from (rho, theta) and powers by repeated products.
inline LComplex evaluate(const annulus::HarmonicSeries& h, long double rho, long double theta) {
  const LComplex z = std::polar(rho, theta);
  const LComplex zbar = std::conj(z);
  auto to_l = [](annulus::Complex c) { return LComplex(c.real(), c.imag()); };
  LComplex sum = to_l(h.a(0)) * std::log(rho) + to_l(h.b(0));
  LComplex zp = 1.0L, zbp = 1.0L;  // z^n, conj(z)^n
  for (int n = 1; n <= h.order(); ++n) {
    zp *= z;
    zbp *= zbar;
    sum += to_l(h.a(n)) * zp + to_l(h.b(n)) / zbp;         // b_n conj(z)^-n
    sum += to_l(h.a(-n)) / zp + to_l(h.b(-n)) * zbp;       // a_-n z^-n, b_-n conj(z)^n
  }
  return sum;
}

/// Central difference of f at x.
template <class F>
auto central(F&& f, double x, double step) {
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

template <class F>
auto second_central(F&& f, double x, double step) {
  return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
}

}  // namespace oracle
