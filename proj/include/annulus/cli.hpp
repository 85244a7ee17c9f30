#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace annulus::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFail = 2;
inline constexpr int kExitNotApplicable = 3;

inline constexpr const char* kVersion = "0.1.0";

/// Reproducibility record embedded in every report.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> flags;
  unsigned long long seed = 0;
  std::string version = kVersion;
  std::string timestamp;  // UTC, ISO 8601
  std::map<std::string, double> tolerances;
};

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace annulus::cli
