#include <cmath>
#include <numbers>

#include "ring_common.hpp"

namespace annulus::kernels {

RingNodes::RingNodes(std::size_t count) : cos_t(count), sin_t(count) {
  for (std::size_t k = 0; k < count; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
    cos_t[k] = std::cos(theta);
    sin_t[k] = std::sin(theta);
  }
}

void RingSamples::resize(std::size_t count) {
  for (std::size_t c = 0; c < kChannels; ++c) {
    re[c].resize(count);
    im[c].resize(count);
  }
}

namespace detail {

void eval_ring_scalar(const RingCoefficients& coeffs, const RingNodes& nodes, RingSamples& out) {
  out.resize(nodes.size());
  for (std::size_t c = 0; c < kChannels; ++c) {
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      eval_node(coeffs, c, nodes.cos_t[k], nodes.sin_t[k], out.re[c][k], out.im[c][k]);
    }
  }
}

RingMoments ring_moments_scalar(const RingSamples& samples) {
  MomentSums sums;
  for (std::size_t k = 0; k < samples.size(); ++k) sums.add_node(samples, k);
  return sums.finish(samples.size());
}

}  // namespace detail
}  // namespace annulus::kernels
