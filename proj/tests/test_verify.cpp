#include <algorithm>

#include <gtest/gtest.h>

#include "annulus/error.hpp"
#include "annulus/verify.hpp"

using namespace annulus;

TEST(Verify, ZeroTrialsGivesEmptyReport) {
  const VerificationReport r = run_suite("all", 1, 0);
  EXPECT_TRUE(r.checks.empty());
  EXPECT_TRUE(r.all_pass());
}

TEST(Verify, UnknownSuite) {
  EXPECT_FALSE(is_suite("nonsense"));
  EXPECT_THROW(run_suite("nonsense", 1, 1), Error);
}

TEST(Verify, AllSuitesPassAndAreSorted) {
  const VerificationReport r = run_suite("all", 1, 10);
  ASSERT_FALSE(r.checks.empty());
  EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                             [](const VerificationCheck& a, const VerificationCheck& b) { return a.name < b.name; }));
  for (const VerificationCheck& c : r.checks) {
    EXPECT_TRUE(c.pass) << c.name << " residual " << c.residual << " tolerance " << c.tolerance;
    EXPECT_FALSE(c.anchor.empty());
  }
}

TEST(Verify, SuitesPartitionAll) {
  std::size_t total = 0;
  for (const std::string& s : suite_names()) {
    if (s != "all") total += run_suite(s, 2, 1).checks.size();
  }
  EXPECT_EQ(total, run_suite("all", 2, 1).checks.size());
}

TEST(Verify, CertificatesIncludePhi) {
  const VerificationReport r = run_suite("certificates", 1, 1);
  const auto it = std::find_if(r.checks.begin(), r.checks.end(),
                               [](const VerificationCheck& c) { return c.name == "certificate.phi-positive"; });
  ASSERT_NE(it, r.checks.end());
  EXPECT_TRUE(it->pass);
  EXPECT_LT(it->residual, -8.0);  // minus the minimum of phi on the interval
}

TEST(Verify, DeterministicGivenSeed) {
  const VerificationReport a = run_suite("identities", 5, 5);
  const VerificationReport b = run_suite("identities", 5, 5);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) EXPECT_EQ(a.checks[i].residual, b.checks[i].residual);
}

TEST(Verify, ToleranceOverrideCanFail) {
  Tolerances tol;
  EXPECT_TRUE(tol.set("boundary", 0.0));
  EXPECT_FALSE(tol.set("missing", 1.0));
  EXPECT_EQ(tol.table().at("boundary"), 0.0);
  tol.set("identity", 1e-30);
  const VerificationReport r = run_suite("identities", 1, 20, tol);
  EXPECT_FALSE(r.all_pass());
}
