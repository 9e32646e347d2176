#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scc/number_theory.hpp"

namespace scc::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class Suite { characters, identities, oracle, asymptotic, distribution, all };

/// Runs one suite. `max` overrides the suite's size parameter where it has
/// one (character scan bound, identity order, oracle table size).
std::vector<CheckResult> run_suite(Suite suite, std::optional<std::int64_t> max, PartitionCache& cache);

}  // namespace scc::verify
