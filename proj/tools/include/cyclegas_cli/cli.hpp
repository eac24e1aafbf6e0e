#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclegas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the directory used when --output is absent.
inline constexpr const char* kOutputDirEnv = "CYCLEGAS_OUTPUT_DIR";

/// Runs one command. args excludes the program name. Results go to out (or
/// to the requested file), diagnostics to err as "ERROR <code>: ...".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckResult {
  std::string name;
  bool passed;
  double deviation;  // worst observed relative deviation
  double tolerance;
};

/// Cross-validation suite behind the verify command.
std::vector<CheckResult> run_verification();

}  // namespace cyclegas::cli
