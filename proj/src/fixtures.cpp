#include <cstdlib>
#include <stdexcept>

#include "latfano/fixtures.hpp"

namespace latfano {
namespace {

Fixture make(const std::string& name, std::vector<Vec> pts,
             const std::string& notes) {
  return Fixture{name, hull(pts), notes};
}

// REEVEn(N): conv{0, e1, e2, (1,1,N)}; empty simplex of normalized volume N
Fixture reeve(long long n) {
  return make("REEVEn(" + std::to_string(n) + ")",
              {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, n}},
              "empty lattice simplex of normalized volume " +
                  std::to_string(n));
}

}  // namespace

Fixture builtin(const std::string& name) {
  if (name == "REEVE2") return reeve(2);
  if (name == "CUBE3")
    return make("CUBE3",
                {{-1, -1, -1},
                 {-1, -1, 1},
                 {-1, 1, -1},
                 {-1, 1, 1},
                 {1, -1, -1},
                 {1, -1, 1},
                 {1, 1, -1},
                 {1, 1, 1}},
                "reflexive cube [-1,1]^3");
  if (name == "OCTA")
    return make(
        "OCTA",
        {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
        "reflexive octahedron, polar dual of CUBE3");
  if (name == "BIGSIMPLEX")
    return make("BIGSIMPLEX",
                {{-1, -1, -1}, {3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}},
                "reflexive simplex 4*unit simplex shifted by (-1,-1,-1)");
  if (name == "DUALSIMPLEX")
    return make("DUALSIMPLEX",
                {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                "reflexive simplex, polar dual of BIGSIMPLEX");
  if (name == "UNITCUBE")
    return make("UNITCUBE",
                {{0, 0, 0},
                 {0, 0, 1},
                 {0, 1, 0},
                 {0, 1, 1},
                 {1, 0, 0},
                 {1, 0, 1},
                 {1, 1, 0},
                 {1, 1, 1}},
                "unit cube [0,1]^3");
  if (name == "UNITSIMPLEX")
    return make("UNITSIMPLEX", {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                "unimodular simplex conv{0, e1, e2, e3}");
  if (name.rfind("REEVEn(", 0) == 0 && name.back() == ')') {
    const std::string body = name.substr(7, name.size() - 8);
    char* end = nullptr;
    long long n = std::strtoll(body.c_str(), &end, 10);
    if (end && *end == '\0' && !body.empty() && n >= 1) return reeve(n);
  }
  throw std::invalid_argument("unknown builtin polytope: " + name);
}

std::vector<Fixture> builtin_fixtures() {
  std::vector<Fixture> fs;
  for (const char* n : {"REEVE2", "CUBE3", "OCTA", "BIGSIMPLEX", "DUALSIMPLEX",
                        "UNITCUBE", "UNITSIMPLEX"})
    fs.push_back(builtin(n));
  return fs;
}

std::vector<Fixture> reflexive_fixtures() {
  std::vector<Fixture> fs;
  for (const char* n : {"CUBE3", "OCTA", "BIGSIMPLEX", "DUALSIMPLEX"})
    fs.push_back(builtin(n));
  // 2*REEVE2 recentred: the doubled Reeve simplex has the single interior
  // point (1,1,1); moving it to the origin makes the polytope reflexive.
  Polytope r2 = translate(dilate(builtin("REEVE2").polytope, Int(2)),
                          Vec{-1, -1, -1});
  fs.push_back(Fixture{"REEVE2X2", r2,
                       "doubled Reeve simplex centred at its interior point"});
  return fs;
}

}  // namespace latfano
