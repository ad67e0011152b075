#include <stdexcept>

#include "latfano/rng.hpp"

namespace latfano {

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed ^ (0x9E3779B97F4A7C15ull * (index + 1))).next();
}

Polytope gen_random_polytope(int dim, std::uint64_t seed, long long box,
                             int npoints) {
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("gen_random_polytope: dim must be 2 or 3");
  if (box < 1)
    throw std::invalid_argument("gen_random_polytope: box must be >= 1");
  if (npoints < dim + 1)
    throw std::invalid_argument("gen_random_polytope: need at least dim+1 points");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vec> pts;
    pts.reserve(static_cast<size_t>(npoints));
    for (int i = 0; i < npoints; ++i) {
      Vec p = Vec::zero(dim);
      for (int k = 0; k < dim; ++k)
        p[k] = Int(static_cast<long long>(
            rng.next() % static_cast<std::uint64_t>(box + 1)));
      pts.push_back(p);
    }
    Polytope P = hull(pts);
    if (P.dim() == dim) return P;
  }
  throw std::runtime_error(
      "gen_random_polytope: no full-dimensional hull in 64 attempts");
}

Fan random_smooth_fan2(std::uint64_t seed, int steps) {
  if (steps < 0)
    throw std::invalid_argument("random_smooth_fan2: negative step count");
  SplitMix64 rng(seed);
  // rays kept in counterclockwise cyclic order; cones are consecutive pairs
  std::vector<Vec> cyc{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int s = 0; s < steps; ++s) {
    const size_t i = static_cast<size_t>(rng.below(cyc.size()));
    const size_t j = (i + 1) % cyc.size();
    Vec mid = cyc[i] + cyc[j];  // primitive: the split cone is unimodular
    cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(i) + 1, mid);
  }
  std::vector<std::vector<int>> cones;
  for (size_t i = 0; i < cyc.size(); ++i)
    cones.push_back(
        {static_cast<int>(i), static_cast<int>((i + 1) % cyc.size())});
  return make_fan(cyc, cones);
}

std::pair<Polytope, Polytope> parallel_segment_pair(std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto draw_base = [&rng] {
    long long x = static_cast<long long>(rng.below(4));
    long long y = static_cast<long long>(rng.below(4));
    return Vec{x, y};
  };
  Vec b1 = draw_base();
  Vec b2 = draw_base();
  Vec d = Vec::zero(2);
  do {
    d[0] = Int(static_cast<long long>(rng.below(5)) - 2);
    d[1] = Int(static_cast<long long>(rng.below(5)) - 2);
  } while (is_zero(d));
  d = primitive(d);
  Int l1(static_cast<long long>(1 + rng.below(3)));
  Int l2(static_cast<long long>(1 + rng.below(3)));
  return {hull({b1, b1 + l1 * d}), hull({b2, b2 + l2 * d})};
}

}  // namespace latfano
