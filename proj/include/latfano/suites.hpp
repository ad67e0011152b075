// Seeded batch property suites aggregating the individual checks.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latfano/normality.hpp"

namespace latfano {

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckReport> items;
  int passed = 0;
  int failed = 0;  // passed + failed = items.size()
};

/// Runs n seeded instances of a named suite. Known names: idp-polygons,
/// fano-minkowski, pair-identity-k2, surface-mult, surface-bpf,
/// decompose-width. Deterministic in (name, seed, n); items may run in
/// parallel but are reported in input order. Unknown names throw.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int n);

}  // namespace latfano
