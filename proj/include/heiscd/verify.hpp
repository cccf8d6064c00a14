#pragma once

// Invariant suites run against one group H(p^n). Checks are exhaustive where
// the tuple count fits the budget and use a fixed-seed sample otherwise.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heiscd/group.hpp"
#include "heiscd/subgroup.hpp"

namespace heiscd {

enum class Suite { Core, Pseudo, Structure, Lattice, Oracle, All };

std::optional<Suite> parse_suite(std::string_view name);
const char* suite_name(Suite s) noexcept;

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  bool sampled = false;
  bool skipped = false;
  std::uint64_t cases = 0;
  std::string detail;  // first counterexample, or a note
};

struct VerifyOptions {
  // Largest number of tuples a check enumerates before switching to samples.
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 24;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 0x4845495343440001ULL;
  EnumerationLimits limits = EnumerationLimits::from_environment();
};

std::vector<CheckResult> run_suite(Suite suite, const GroupParams& g,
                                   const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results) noexcept;

}  // namespace heiscd
