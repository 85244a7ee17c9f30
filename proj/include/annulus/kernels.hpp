#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

// Inner loops of the circle quadrature: evaluating a trigonometric polynomial
// at M equispaced nodes and reducing the samples to circular means. Each
// kernel has a scalar reference and an AVX2 variant; the active set is picked
// once at runtime from the CPU features (override with ANNULUS_KERNELS=scalar|avx2).

namespace annulus::kernels {

/// Three channels sampled on one circle: h, h_rho, h_theta.
enum Channel : std::size_t { kValue = 0, kRadial = 1, kAngular = 2, kChannels = 3 };

/// Equispaced nodes theta_k = 2 pi k / M on the unit circle.
struct RingNodes {
  explicit RingNodes(std::size_t count);
  std::size_t size() const noexcept { return cos_t.size(); }
  std::vector<double> cos_t;
  std::vector<double> sin_t;
};

/// Fourier coefficients per channel, index n + order for n in [-order, order].
struct RingCoefficients {
  int order = 0;
  std::array<std::vector<double>, kChannels> re;
  std::array<std::vector<double>, kChannels> im;
};

/// Structure-of-arrays samples per channel.
struct RingSamples {
  void resize(std::size_t count);
  std::size_t size() const noexcept { return re[kValue].size(); }
  std::complex<double> at(Channel c, std::size_t k) const { return {re[c][k], im[c][k]}; }
  std::array<std::vector<double>, kChannels> re;
  std::array<std::vector<double>, kChannels> im;
};

/// Circular means of the products needed by the quadrature layer.
struct RingMoments {
  std::complex<double> mean_h;
  double mean_abs2_h = 0.0;
  double mean_abs2_rho = 0.0;
  double mean_abs2_theta = 0.0;
  std::complex<double> mean_conj_h_rho;    // mean of conj(h) h_rho
  std::complex<double> mean_conj_h_theta;  // mean of conj(h) h_theta
  std::complex<double> mean_conj_rho_theta;  // mean of conj(h_rho) h_theta
};

struct KernelSet {
  std::string_view name;
  void (*eval_ring)(const RingCoefficients&, const RingNodes&, RingSamples&);
  RingMoments (*ring_moments)(const RingSamples&);
};

const KernelSet& scalar_kernels();
/// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const KernelSet* avx2_kernels();
const KernelSet& active_kernels();

}  // namespace annulus::kernels
