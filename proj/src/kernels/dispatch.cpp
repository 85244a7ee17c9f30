#include <cstdlib>
#include <string_view>

#include "ring_common.hpp"

namespace annulus::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(ANNULUS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelSet* select() {
  const char* env = std::getenv("ANNULUS_KERNELS");
  const std::string_view wanted = env ? env : "auto";
  if (wanted == "scalar") return &scalar_kernels();
  const KernelSet* simd = avx2_kernels();
  return simd ? simd : &scalar_kernels();
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", &detail::eval_ring_scalar, &detail::ring_moments_scalar};
  return set;
}

const KernelSet* avx2_kernels() {
#if defined(ANNULUS_HAVE_AVX2)
  static const KernelSet set{"avx2", &detail::eval_ring_avx2, &detail::ring_moments_avx2};
  return cpu_has_avx2() ? &set : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() {
  static const KernelSet* chosen = select();
  return *chosen;
}

}  // namespace annulus::kernels
