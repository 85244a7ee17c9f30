#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "annulus/error.hpp"
#include "annulus/means.hpp"
#include "annulus/quadrature.hpp"
#include "annulus/sampling.hpp"
#include "oracles.hpp"

using namespace annulus;

namespace {

const HarmonicSeries kH1 = extremal_map(1.0);

HarmonicSeries sample(std::uint64_t seed, int N, double outer = 2.0) {
  SamplerConfig cfg;
  cfg.seed = seed;
  cfg.N = N;
  cfg.include_log = true;
  cfg.include_const = true;
  cfg.outer_radius = outer;
  return random_series(cfg);
}

double critical_U(double rho) { return std::pow((rho * rho + 1.0) / (2.0 * rho), 2); }

}  // namespace

TEST(UMode, CriticalMapModeOne) {
  const RadialProfile u = U_mode(kH1, 1);
  for (double rho : {1.0, 1.5, 2.0, 3.0}) EXPECT_NEAR(u.value(rho), critical_U(rho), 1e-15);
}

TEST(UMode, ConstantMode) {
  HarmonicSeries h(0);
  h.set_b(0, Complex(1.0, 2.0));
  for (double rho : {0.5, 1.0, 4.0}) {
    EXPECT_NEAR(U_mode(h, 0).value(rho), 5.0, 1e-15);
    EXPECT_EQ(U_mode(h, 0).deriv1(rho), 0.0);
  }
}

TEST(UMode, MatchesQuadratureOfSingleMode) {
  const HarmonicSeries h = sample(3, 7);
  for (int n = -7; n <= 7; ++n) {
    HarmonicSeries hn(7);
    hn.set_a(n, h.a(n)).set_b(n, h.b(n));
    EXPECT_NEAR(U_mode(h, n).value(1.4), quadratic_mean_numeric(hn, 1.4, {}), 1e-14) << n;
  }
}

TEST(UMode, IndexError) {
  try {
    U_mode(kH1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Index);
  }
}

TEST(UClosed, Examples) {
  for (double rho : {1.0, 2.0, 5.0}) EXPECT_NEAR(U_closed(identity_map()).value(rho), rho * rho, 1e-13);
  for (double lambda : {-0.7, 0.2, 0.6, 1.0}) {
    for (double rho : {1.0, 1.7, 3.0}) {
      const double want = std::pow((rho * rho + lambda) / ((1.0 + lambda) * rho), 2);
      EXPECT_NEAR(U_closed(extremal_map(lambda)).value(rho), want, 1e-14 * want);
    }
  }
}

TEST(Profiles, DerivativesMatchFiniteDifferences) {
  for (int t = 0; t < 30; ++t) {
    const HarmonicSeries h = sample(20 + t, 1 + t % 9);
    for (const RadialProfile& p : {U_closed(h), V_closed(h), U_mode(h, (t % 3) - 1)}) {
      const double rho = 1.3 + 0.02 * t;
      const auto value = [&](double r) { return p.value(r); };
      const auto d1 = [&](double r) { return p.deriv1(r); };
      const double scale = 1.0 + std::abs(p.value(rho));
      EXPECT_NEAR(oracle::central(value, rho, 1e-4), p.deriv1(rho), 1e-6 * scale) << p.label();
      EXPECT_NEAR(oracle::central(d1, rho, 1e-4), p.deriv2(rho), 1e-6 * scale) << p.label();
      EXPECT_NEAR(oracle::second_central(value, rho, 1e-3), p.deriv2(rho), 1e-4 * scale) << p.label();
    }
  }
}

TEST(Profiles, PowerProfile) {
  const RadialProfile p = power_profile(3.0, 2.0);
  EXPECT_DOUBLE_EQ(p.value(2.0), 12.0);
  EXPECT_DOUBLE_EQ(p.deriv1(2.0), 12.0);
  EXPECT_DOUBLE_EQ(p.deriv2(2.0), 6.0);
}

TEST(VClosed, Examples) {
  HarmonicSeries constant(0);
  constant.set_b(0, 3.0);
  EXPECT_EQ(V_closed(constant).value(1.7), 0.0);
  for (double rho : {1.0, 2.0}) EXPECT_EQ(V_closed(kH1).value(rho), U_closed(kH1).value(rho));
}

TEST(VClosed, IsUMinusSquaredMean) {
  for (int t = 0; t < 50; ++t) {
    const HarmonicSeries h = sample(70 + t, 1 + t % 12);
    const double rho = 1.0 + 0.02 * t;
    const Complex mean = h.mode_amplitude(0, rho);
    EXPECT_NEAR(V_closed(h).value(rho), U_closed(h).value(rho) - std::norm(mean), 1e-13);
  }
}

TEST(VClosed, TermwiseSecondDerivative) {
  for (int t = 0; t < 200; ++t) {
    const HarmonicSeries h = sample(900 + t, 1 + t % 16, 3.0);
    const double rho = 1.0 + 0.01 * t;
    const double generic = V_closed(h).deriv2(rho);
    EXPECT_NEAR(V_second_derivative_termwise(h, rho), generic, 1e-12 * std::max(1.0, std::abs(generic)));
    EXPECT_GT(V_second_derivative_termwise(h, rho), 0.0);
  }
}

TEST(InnerLimits, Examples) {
  EXPECT_EQ(inner_mean(kH1), Complex{});
  EXPECT_EQ(normal_mean_coeff(kH1), Complex{});
  HarmonicSeries h = kH1;
  h.set_b(0, Complex(2.0, 1.0));
  EXPECT_EQ(inner_mean(h), Complex(2.0, 1.0));
}

TEST(InnerLimits, QuadratureConvergesToClosedForm) {
  const HarmonicSeries h = sample(5, 6);
  double prev = INFINITY;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const Complex mean = circular_mean([&](PolarPoint p) { return evaluate(h, p); }, 1.0 + eps, {});
    const Complex normal = circular_mean([&](PolarPoint p) { return derivatives(h, p).h_rho; }, 1.0 + eps, {});
    const double err = std::abs(mean - inner_mean(h)) + std::abs(normal - normal_mean_coeff(h));
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(ClassPredicates, Examples) {
  EXPECT_TRUE(is_class_D(kH1));
  EXPECT_TRUE(is_class_N(kH1));
  HarmonicSeries with_log = identity_map();
  with_log.set_a(0, 1.0);
  EXPECT_TRUE(is_class_D(with_log));
  EXPECT_FALSE(is_class_N(with_log));
  HarmonicSeries shifted = identity_map();
  shifted.set_b(0, 1.0);
  EXPECT_FALSE(is_class_D(shifted));
  EXPECT_TRUE(is_class_N(shifted));
  shifted.set_b(0, 1e-13);
  EXPECT_TRUE(is_class_D(shifted));
}

TEST(InitialSpeed, Examples) {
  for (double lambda : {-0.8, 0.0, 0.4, 1.0}) {
    EXPECT_NEAR(initial_speed(extremal_map(lambda)), (1.0 - lambda) / (1.0 + lambda), 1e-14);
  }
  EXPECT_EQ(initial_speed(kH1), 0.0);
  EXPECT_NEAR(initial_speed(identity_map()), 1.0, 1e-15);
}

TEST(InitialSpeed, DegenerateInnerCircle) {
  HarmonicSeries h(0);
  h.set_a(0, 1.0);  // log|z| vanishes on C_1
  try {
    initial_speed(h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
  }
}

TEST(MeanOuterRadius, Examples) {
  EXPECT_NEAR(mean_outer_radius(kH1, 2.0), 1.25, 1e-15);
  for (double R : {1.5, 4.0}) EXPECT_NEAR(mean_outer_radius(identity_map(), R), R, 1e-15);
  EXPECT_NEAR(mean_outer_radius(extremal_map(0.6), 3.0), 2.0, 1e-15);
}

TEST(EnergyIdentity, RandomSeries) {
  for (int t = 0; t < 20; ++t) {
    const HarmonicSeries h = sample(30 + t, 1 + t % 14, 3.0);
    const double r = 1.0 + 0.05 * t, rho = r + 0.7;
    const RadialProfile u = U_closed(h);
    const double flux = rho * u.deriv1(rho) - r * u.deriv1(r);
    EXPECT_NEAR(std::numbers::pi * flux, dirichlet_energy(h, r, rho, {}), 1e-8 * std::abs(flux));
  }
}

// (1/rho) d/drho (rho U') equals twice the circular mean of ||Dh||^2.
TEST(EnergyIdentity, PointwiseFluxDerivative) {
  for (int t = 0; t < 50; ++t) {
    const HarmonicSeries h = sample(130 + t, 1 + t % 14, 3.0);
    const double rho = 1.0 + 0.04 * t;
    const RadialJet j = U_closed(h).jet(rho);
    const double lhs = j.d2 + j.d1 / rho;
    const kernels::RingMoments m = Ring(h, rho, {}).moments();
    const double rhs = 2.0 * (m.mean_abs2_rho + m.mean_abs2_theta / (rho * rho));
    EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, rhs));
    EXPECT_GE(lhs, 0.0);
  }
}
