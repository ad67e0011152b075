// Deterministic cross-platform randomness for the property suites, plus the
// seeded instance generators built on it.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "latfano/polytope.hpp"
#include "latfano/toric.hpp"

namespace latfano {

/// SplitMix64 (Steele, Lea, Flood): the state advances by the golden-ratio
/// increment and the output is a two-round xor-multiply finalizer. The same
/// seed yields the same stream on every platform; nothing here depends on
/// std::rand or libstdc++ distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Draw from [0, n); n > 0. Plain modulo, documented as part of the
  /// generator contract (desk-scale ranges, reproducibility over uniformity).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

/// Seed of the index-th item inside a suite run. Splitting keeps items
/// independent of each other and of the iteration order:
///   child_seed(seed, i) = SplitMix64(seed xor (0x9E3779B97F4A7C15 * (i+1))).next()
std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index);

/// Hull of npoints draws from the integer box [0, box]^dim (each coordinate
/// next() % (box+1)), resampled until full-dimensional, at most 64 attempts.
/// dim in {2,3}, box >= 1, npoints >= dim+1.
Polytope gen_random_polytope(int dim, std::uint64_t seed, long long box,
                             int npoints);

/// All reflexive polygons with vertices in [-3,3]^2, one representative per
/// unimodular equivalence class (16 of them), each the lex-least canonical
/// form of its class.
std::vector<Polytope> gen_reflexive_polygons();

/// Smooth complete 2-fan: the four axis rays refined by `steps` seeded
/// stellar subdivisions (each inserts the sum of a random cone's two rays,
/// which is again primitive because the cone is unimodular).
Fan random_smooth_fan2(std::uint64_t seed, int steps);

/// Two parallel lattice segments in the plane: seeded base points in
/// [0,3]^2, a shared primitive direction, lengths in 1..3.
std::pair<Polytope, Polytope> parallel_segment_pair(std::uint64_t seed);

}  // namespace latfano
