// Exhaustive classification of reflexive polygons. Vertices of a reflexive
// polygon are primitive (a vertex v on a facet with <v,n> = -1 cannot be a
// proper multiple), and every equivalence class has a representative with
// vertices in [-3,3]^2, so scanning vertex subsets of the primitive points of
// that box and reducing modulo GL_2(Z) finds every class.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "latfano/rng.hpp"

namespace latfano {
namespace {

bool divides(Int d, Int n) { return n == d * floordiv(n, d); }

struct Cand {
  Polytope P;
  std::vector<Vec> cycle;
  size_t nverts;
  Int volume;
};

Cand annotate(const Polytope& P) {
  return Cand{P, polygon_cycle(P), P.vertices().size(), normalized_volume(P)};
}

// is there a linear unimodular map taking a onto b?  Both polygons contain
// the origin as their unique interior lattice point, so any equivalence is
// linear and must take some ordered pair of adjacent vertices of a onto a
// fixed ordered pair of adjacent vertices of b.
bool equivalent(const Cand& a, const Cand& b) {
  if (a.nverts != b.nverts || a.volume != b.volume) return false;
  const Vec q0 = b.cycle[0];
  const Vec q1 = b.cycle[1];
  const Int dq = det2(q0, q1);
  const size_t k = a.cycle.size();
  for (size_t i = 0; i < k; ++i) {
    for (int orient = 0; orient < 2; ++orient) {
      const Vec& p0 = orient ? a.cycle[(i + 1) % k] : a.cycle[i];
      const Vec& p1 = orient ? a.cycle[i] : a.cycle[(i + 1) % k];
      const Int dp = det2(p0, p1);
      if (abs(dp) != abs(dq)) continue;
      // U [p0 p1] = [q0 q1], so U = [q0 q1] adj([p0 p1]) / det
      const Int n00 = q0[0] * p1[1] - q1[0] * p0[1];
      const Int n01 = q1[0] * p0[0] - q0[0] * p1[0];
      const Int n10 = q0[1] * p1[1] - q1[1] * p0[1];
      const Int n11 = q1[1] * p0[0] - q0[1] * p1[0];
      if (!divides(dp, n00) || !divides(dp, n01) || !divides(dp, n10) ||
          !divides(dp, n11))
        continue;
      const Int u00 = divexact(n00, dp), u01 = divexact(n01, dp);
      const Int u10 = divexact(n10, dp), u11 = divexact(n11, dp);
      if (abs(u00 * u11 - u01 * u10) != Int(1)) continue;
      std::vector<Vec> image;
      image.reserve(a.nverts);
      for (const Vec& v : a.P.vertices())
        image.push_back(Vec{(u00 * v[0] + u01 * v[1]).value(),
                            (u10 * v[0] + u11 * v[1]).value()});
      std::sort(image.begin(), image.end());
      if (image == b.P.vertices()) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Polytope> gen_reflexive_polygons() {
  std::vector<Vec> prim;
  for (long long x = -3; x <= 3; ++x)
    for (long long y = -3; y <= 3; ++y) {
      Vec v{x, y};
      if (!is_zero(v) && is_primitive(v)) prim.push_back(v);
    }
  const int n = static_cast<int>(prim.size());

  std::vector<Cand> classes;
  std::vector<Vec> sub;
  // subsets in lexicographic order; a reflexive polygon has 3..6 vertices
  for (int k = 3; k <= 6; ++k) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      bool xneg = false, xpos = false, yneg = false, ypos = false;
      for (int i : idx) {
        const Vec& p = prim[static_cast<size_t>(i)];
        xneg |= p[0] < Int(0);
        xpos |= p[0] > Int(0);
        yneg |= p[1] < Int(0);
        ypos |= p[1] > Int(0);
      }
      // the origin must be interior, so both axes need both signs
      if (xneg && xpos && yneg && ypos) {
        sub.clear();
        for (int i : idx) sub.push_back(prim[static_cast<size_t>(i)]);
        Polytope P = hull(sub);
        if (P.vertices().size() == static_cast<size_t>(k) &&
            static_cast<bool>(is_reflexive(P))) {
          Cand c = annotate(P);
          bool known = false;
          for (const Cand& cls : classes)
            if (equivalent(c, cls)) {
              known = true;
              break;
            }
          // subsets arrive in lex order, so the first member of a class is
          // the lex-least representative inside the box
          if (!known) classes.push_back(std::move(c));
        }
      }
      int i = k - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }

  std::sort(classes.begin(), classes.end(), [](const Cand& a, const Cand& b) {
    return std::lexicographical_compare(a.P.vertices().begin(),
                                        a.P.vertices().end(),
                                        b.P.vertices().begin(),
                                        b.P.vertices().end());
  });
  std::vector<Polytope> out;
  out.reserve(classes.size());
  for (Cand& c : classes) out.push_back(std::move(c.P));
  return out;
}

}  // namespace latfano
