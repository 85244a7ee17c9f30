// Compiled with -mavx2 only. FMA stays off so each lane repeats the scalar
// reference's rounding sequence exactly.
#include <immintrin.h>

#include "ring_common.hpp"

namespace annulus::kernels::detail {

namespace {

struct Lanes {
  __m256d re;
  __m256d im;
};

inline Lanes horner_lanes(const RingCoefficients& coeffs, std::size_t channel, __m256d wr, __m256d wi) {
  const int order = coeffs.order;
  const double* cr = coeffs.re[channel].data() + order;
  const double* ci = coeffs.im[channel].data() + order;

  __m256d pr = _mm256_set1_pd(cr[order]);
  __m256d pi = _mm256_set1_pd(ci[order]);
  for (int n = order - 1; n >= 0; --n) {
    const __m256d tr = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(pr, wr), _mm256_mul_pd(pi, wi)), _mm256_set1_pd(cr[n]));
    const __m256d ti = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(pr, wi), _mm256_mul_pd(pi, wr)), _mm256_set1_pd(ci[n]));
    pr = tr;
    pi = ti;
  }

  __m256d nr = _mm256_setzero_pd();
  __m256d ni = _mm256_setzero_pd();
  if (order > 0) {
    nr = _mm256_set1_pd(cr[-order]);
    ni = _mm256_set1_pd(ci[-order]);
    for (int n = order - 1; n >= 1; --n) {
      const __m256d tr =
          _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(nr, wr), _mm256_mul_pd(ni, wi)), _mm256_set1_pd(cr[-n]));
      const __m256d ti =
          _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(ni, wr), _mm256_mul_pd(nr, wi)), _mm256_set1_pd(ci[-n]));
      nr = tr;
      ni = ti;
    }
    const __m256d tr = _mm256_add_pd(_mm256_mul_pd(nr, wr), _mm256_mul_pd(ni, wi));
    const __m256d ti = _mm256_sub_pd(_mm256_mul_pd(ni, wr), _mm256_mul_pd(nr, wi));
    nr = tr;
    ni = ti;
  }
  return {_mm256_add_pd(pr, nr), _mm256_add_pd(pi, ni)};
}

inline double hsum(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
}

}  // namespace

void eval_ring_avx2(const RingCoefficients& coeffs, const RingNodes& nodes, RingSamples& out) {
  const std::size_t count = nodes.size();
  out.resize(count);
  const std::size_t body = count - count % 4;
  for (std::size_t c = 0; c < kChannels; ++c) {
    for (std::size_t k = 0; k < body; k += 4) {
      const __m256d wr = _mm256_loadu_pd(nodes.cos_t.data() + k);
      const __m256d wi = _mm256_loadu_pd(nodes.sin_t.data() + k);
      const Lanes v = horner_lanes(coeffs, c, wr, wi);
      _mm256_storeu_pd(out.re[c].data() + k, v.re);
      _mm256_storeu_pd(out.im[c].data() + k, v.im);
    }
    for (std::size_t k = body; k < count; ++k) {
      eval_node(coeffs, c, nodes.cos_t[k], nodes.sin_t[k], out.re[c][k], out.im[c][k]);
    }
  }
}

RingMoments ring_moments_avx2(const RingSamples& s) {
  const std::size_t count = s.size();
  const std::size_t body = count - count % 4;
  __m256d h_re = _mm256_setzero_pd(), h_im = _mm256_setzero_pd();
  __m256d a_h = _mm256_setzero_pd(), a_r = _mm256_setzero_pd(), a_t = _mm256_setzero_pd();
  __m256d hr_re = _mm256_setzero_pd(), hr_im = _mm256_setzero_pd();
  __m256d ht_re = _mm256_setzero_pd(), ht_im = _mm256_setzero_pd();
  __m256d rt_re = _mm256_setzero_pd(), rt_im = _mm256_setzero_pd();
  for (std::size_t k = 0; k < body; k += 4) {
    const __m256d hr = _mm256_loadu_pd(s.re[kValue].data() + k);
    const __m256d hi = _mm256_loadu_pd(s.im[kValue].data() + k);
    const __m256d rr = _mm256_loadu_pd(s.re[kRadial].data() + k);
    const __m256d ri = _mm256_loadu_pd(s.im[kRadial].data() + k);
    const __m256d tr = _mm256_loadu_pd(s.re[kAngular].data() + k);
    const __m256d ti = _mm256_loadu_pd(s.im[kAngular].data() + k);
    h_re = _mm256_add_pd(h_re, hr);
    h_im = _mm256_add_pd(h_im, hi);
    a_h = _mm256_add_pd(a_h, _mm256_add_pd(_mm256_mul_pd(hr, hr), _mm256_mul_pd(hi, hi)));
    a_r = _mm256_add_pd(a_r, _mm256_add_pd(_mm256_mul_pd(rr, rr), _mm256_mul_pd(ri, ri)));
    a_t = _mm256_add_pd(a_t, _mm256_add_pd(_mm256_mul_pd(tr, tr), _mm256_mul_pd(ti, ti)));
    hr_re = _mm256_add_pd(hr_re, _mm256_add_pd(_mm256_mul_pd(hr, rr), _mm256_mul_pd(hi, ri)));
    hr_im = _mm256_add_pd(hr_im, _mm256_sub_pd(_mm256_mul_pd(hr, ri), _mm256_mul_pd(hi, rr)));
    ht_re = _mm256_add_pd(ht_re, _mm256_add_pd(_mm256_mul_pd(hr, tr), _mm256_mul_pd(hi, ti)));
    ht_im = _mm256_add_pd(ht_im, _mm256_sub_pd(_mm256_mul_pd(hr, ti), _mm256_mul_pd(hi, tr)));
    rt_re = _mm256_add_pd(rt_re, _mm256_add_pd(_mm256_mul_pd(rr, tr), _mm256_mul_pd(ri, ti)));
    rt_im = _mm256_add_pd(rt_im, _mm256_sub_pd(_mm256_mul_pd(rr, ti), _mm256_mul_pd(ri, tr)));
  }
  MomentSums sums;
  sums.h_re = hsum(h_re);
  sums.h_im = hsum(h_im);
  sums.abs2_h = hsum(a_h);
  sums.abs2_rho = hsum(a_r);
  sums.abs2_theta = hsum(a_t);
  sums.hr_re = hsum(hr_re);
  sums.hr_im = hsum(hr_im);
  sums.ht_re = hsum(ht_re);
  sums.ht_im = hsum(ht_im);
  sums.rt_re = hsum(rt_re);
  sums.rt_im = hsum(rt_im);
  for (std::size_t k = body; k < count; ++k) sums.add_node(s, k);
  return sums.finish(count);
}

}  // namespace annulus::kernels::detail
