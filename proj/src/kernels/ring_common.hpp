#pragma once

#include <cstddef>

#include "annulus/kernels.hpp"

namespace annulus::kernels::detail {

// Horner evaluation of sum_n c_n w^n at one node w = (wr, wi); the negative
// half runs in conj(w). Written with explicit real arithmetic so the AVX2
// variant performs the same operation sequence lane by lane.
inline void eval_node(const RingCoefficients& coeffs, std::size_t channel, double wr, double wi, double& out_re,
                      double& out_im) {
  const int order = coeffs.order;
  const double* cr = coeffs.re[channel].data() + order;
  const double* ci = coeffs.im[channel].data() + order;

  double pr = cr[order];
  double pi = ci[order];
  for (int n = order - 1; n >= 0; --n) {
    const double tr = pr * wr - pi * wi + cr[n];
    const double ti = pr * wi + pi * wr + ci[n];
    pr = tr;
    pi = ti;
  }

  double nr = 0.0;
  double ni = 0.0;
  if (order > 0) {
    nr = cr[-order];
    ni = ci[-order];
    for (int n = order - 1; n >= 1; --n) {
      const double tr = nr * wr + ni * wi + cr[-n];
      const double ti = ni * wr - nr * wi + ci[-n];
      nr = tr;
      ni = ti;
    }
    const double tr = nr * wr + ni * wi;
    const double ti = ni * wr - nr * wi;
    nr = tr;
    ni = ti;
  }
  out_re = pr + nr;
  out_im = pi + ni;
}

struct MomentSums {
  double h_re = 0, h_im = 0;
  double abs2_h = 0, abs2_rho = 0, abs2_theta = 0;
  double hr_re = 0, hr_im = 0;  // conj(h) h_rho
  double ht_re = 0, ht_im = 0;  // conj(h) h_theta
  double rt_re = 0, rt_im = 0;  // conj(h_rho) h_theta

  void add_node(const RingSamples& s, std::size_t k) {
    const double hr = s.re[kValue][k], hi = s.im[kValue][k];
    const double rr = s.re[kRadial][k], ri = s.im[kRadial][k];
    const double tr = s.re[kAngular][k], ti = s.im[kAngular][k];
    h_re += hr;
    h_im += hi;
    abs2_h += hr * hr + hi * hi;
    abs2_rho += rr * rr + ri * ri;
    abs2_theta += tr * tr + ti * ti;
    hr_re += hr * rr + hi * ri;
    hr_im += hr * ri - hi * rr;
    ht_re += hr * tr + hi * ti;
    ht_im += hr * ti - hi * tr;
    rt_re += rr * tr + ri * ti;
    rt_im += rr * ti - ri * tr;
  }

  void add(const MomentSums& o) {
    h_re += o.h_re;
    h_im += o.h_im;
    abs2_h += o.abs2_h;
    abs2_rho += o.abs2_rho;
    abs2_theta += o.abs2_theta;
    hr_re += o.hr_re;
    hr_im += o.hr_im;
    ht_re += o.ht_re;
    ht_im += o.ht_im;
    rt_re += o.rt_re;
    rt_im += o.rt_im;
  }

  RingMoments finish(std::size_t count) const {
    const double inv = 1.0 / static_cast<double>(count);
    RingMoments m;
    m.mean_h = {h_re * inv, h_im * inv};
    m.mean_abs2_h = abs2_h * inv;
    m.mean_abs2_rho = abs2_rho * inv;
    m.mean_abs2_theta = abs2_theta * inv;
    m.mean_conj_h_rho = {hr_re * inv, hr_im * inv};
    m.mean_conj_h_theta = {ht_re * inv, ht_im * inv};
    m.mean_conj_rho_theta = {rt_re * inv, rt_im * inv};
    return m;
  }
};

void eval_ring_scalar(const RingCoefficients& coeffs, const RingNodes& nodes, RingSamples& out);
RingMoments ring_moments_scalar(const RingSamples& samples);

#if defined(ANNULUS_HAVE_AVX2)
void eval_ring_avx2(const RingCoefficients& coeffs, const RingNodes& nodes, RingSamples& out);
RingMoments ring_moments_avx2(const RingSamples& samples);
#endif

}  // namespace annulus::kernels::detail
