// Named built-in polytopes used throughout the checks and the CLI.
#pragma once

#include <string>
#include <vector>

#include "latfano/polytope.hpp"

namespace latfano {

struct Fixture {
  std::string name;
  Polytope polytope;
  std::string notes;
};

/// Registry lookup. Accepts REEVE2, CUBE3, OCTA, BIGSIMPLEX, DUALSIMPLEX,
/// UNITCUBE, UNITSIMPLEX, and the family REEVEn(N) = conv{0, e1, e2, (1,1,N)}
/// for N >= 1. Throws std::invalid_argument on unknown names.
Fixture builtin(const std::string& name);

/// The fixed-name fixtures (REEVEn family excluded), in registry order.
std::vector<Fixture> builtin_fixtures();

/// The five reflexive 3-polytopes driving the Minkowski property suites:
/// CUBE3, OCTA, BIGSIMPLEX, DUALSIMPLEX, and 2*REEVE2 centered at its
/// interior point.
std::vector<Fixture> reflexive_fixtures();

}  // namespace latfano
