#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "annulus/quadrature.hpp"

namespace annulus {

/// Default tolerance per check family; overridable from the CLI.
struct Tolerances {
  double identity = 1e-9;        // pointwise operator identities
  double annihilation = 1e-9;    // L[U(h^lambda)] = 0
  double endpoint = 1e-6;        // relative: |Kq - Ke| / (1 + |Ke|)
  double extremal_k = 1e-8;      // K[U(h^lambda)] = 0
  double subsolution = 1e-10;    // L[V] >= -tol and the mode lower bound
  double equality = 1e-11;       // L[V] = 0 on the equality family
  double speed_bound = 1e-10;    // sqrt(U(s)) >= extremal profile
  double per_mode = 1e-6;
  double variance_k = 1e-6;      // K[V] >= boundary sum
  double boundary = 1e-10;
  double schottky_radius = 1e-9;
  double schottky_area = 1e-6;
  double oracle = 1e-12;         // closed form against quadrature
  double energy = 1e-8;          // relative

  std::map<std::string, double> table() const;
  /// Sets one entry by its table() name; false if the name is unknown.
  bool set(const std::string& name, double value);
};

/// One named check aggregated over its trials. Residuals are the worst case:
/// |lhs - rhs| for identities, the largest shortfall (negative when every trial
/// has slack) for inequalities. A check passes iff residual <= tolerance.
struct VerificationCheck {
  std::string name;
  std::string anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int trials = 0;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<VerificationCheck> checks;  // sorted by name
  bool all_pass() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs every check of a suite ("identities", "subsolution", "kfunctional",
/// "certificates", "schottky" or "all") concurrently. trials = 0 yields an
/// empty report.
VerificationReport run_suite(const std::string& suite, std::uint64_t seed, int trials,
                             const Tolerances& tol = {}, const QuadratureConfig& cfg = {});

}  // namespace annulus
