#include "latfano/reference.hpp"

#include <set>

namespace latfano::reference {

std::vector<Vec> lattice_points_boxscan(const Polytope& P) {
  const int d = P.ambient_dim();
  const std::vector<Vec>& vs = P.vertices();
  long long lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
  for (int k = 0; k < d; ++k) {
    Int mn = vs[0][k], mx = vs[0][k];
    for (const Vec& v : vs) {
      if (v[k] < mn) mn = v[k];
      if (mx < v[k]) mx = v[k];
    }
    lo[k] = mn.value();
    hi[k] = mx.value();
  }
  std::vector<Vec> out;
  if (d == 2) {
    for (long long x = lo[0]; x <= hi[0]; ++x)
      for (long long y = lo[1]; y <= hi[1]; ++y) {
        Vec p{x, y};
        if (contains(P, p)) out.push_back(p);
      }
  } else {
    for (long long x = lo[0]; x <= hi[0]; ++x)
      for (long long y = lo[1]; y <= hi[1]; ++y)
        for (long long z = lo[2]; z <= hi[2]; ++z) {
          Vec p{x, y, z};
          if (contains(P, p)) out.push_back(p);
        }
  }
  return out;  // lex sorted by construction
}

std::vector<Vec> pointwise_sum_serial(const std::vector<Vec>& S,
                                      const std::vector<Vec>& T) {
  std::set<Vec> acc;
  for (const Vec& s : S)
    for (const Vec& t : T) acc.insert(s + t);
  return std::vector<Vec>(acc.begin(), acc.end());
}

}  // namespace latfano::reference
