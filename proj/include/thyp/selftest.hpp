#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace thyp {

struct CheckResult {
  std::string suite;
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double seconds = 0;
  std::string first_failure;

  bool passed() const { return trials > 0 && failures == 0; }
};

enum class Suite { CoverLaws, ImageTheorems, SignRules, Euler };
std::string to_string(Suite s);

struct SelftestOptions {
  std::uint64_t seed = 20240601;
  /// Multiplies every trial count; 1.0 gives the documented sizes.
  double scale = 1.0;
};

std::vector<CheckResult> run_suite(Suite suite, const SelftestOptions& opts = {});
std::vector<CheckResult> run_selftest(const SelftestOptions& opts = {});

}  // namespace thyp
