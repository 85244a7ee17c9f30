#pragma once

#include <cstdint>
#include <random>

#include "annulus/quadrature.hpp"
#include "annulus/series.hpp"

namespace annulus {

struct SamplerConfig {
  std::uint64_t seed = 0;
  int N = 8;
  /// Mode n gets magnitude at most decay^|n|.
  double decay = 0.6;
  bool include_log = false;
  bool include_const = false;
  /// Coefficients of growing terms (a[n] for n > 0, b[n] for n < 0) are
  /// divided by outer_radius^|n|, so that every mode stays below 2 decay^|n|
  /// on A(1, outer_radius). 1 leaves the plain decay^|n| bound.
  double outer_radius = 1.0;

  void validate() const;
};

/// splitmix64 of (base, index): independent streams for parallel trials.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// mt19937_64 with a fixed double conversion, so streams are identical across
/// standard libraries (std::uniform_real_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  Complex unit_phase();

 private:
  std::mt19937_64 engine_;
};

HarmonicSeries random_series(const SamplerConfig& cfg);

/// Sets b0 = 0 and rescales so that the quadratic mean on C_1 is 1.
HarmonicSeries normalize_inner_circle(const HarmonicSeries& h);

/// h^lambda with a[n] += eps (n = 0 perturbs the constant b0 instead),
/// optionally renormalized on the inner circle.
HarmonicSeries perturb_extremal(double lambda, int n, Complex eps, bool renormalize);

struct InjectivityReport {
  double jacobian_min;
  bool windings_ok;
};

/// Minimum Jacobian over a density x 4 density polar grid of the closed annulus
/// A(1, R), and whether the winding number is 1 on density circles. Evidence
/// of injectivity, not a proof.
InjectivityReport injectivity_probe(const HarmonicSeries& h, double R, int density,
                                    const QuadratureConfig& cfg = {});

}  // namespace annulus
