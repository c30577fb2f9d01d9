// Grid verification of every exact identity and inequality the library
// computes. Output is deterministic (no timings) so runs can be diffed.
#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace liedim {

enum class Suite { All, Witt, B, C, Oracle };

Suite parse_suite(const std::string& name);

struct CheckResult {
  std::string name;
  std::size_t checks = 0;
  bool passed = true;
  std::string failure;  // first failing tuple
};

struct VerifyOptions {
  Suite suite = Suite::All;
  bool slow = false;
};

std::vector<CheckResult> run_verify(const VerifyOptions& options);
/// Prints one line per check group plus a summary; returns the exit code
/// (0 all passed, 1 otherwise).
int report_verify(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace liedim
