// Exact convex hulls: monotone chain in the plane, incremental insertion in
// space, with the degenerate ladder (point, segment, flat polygon) handled
// explicitly so every result carries a full H-representation.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "latfano/polytope.hpp"

namespace latfano {
namespace {

// CCW hull of distinct 2d points, strict turns only; returns indices.
std::vector<int> chain2d(const std::vector<Vec>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return pts[static_cast<size_t>(a)] < pts[static_cast<size_t>(b)]; });
  if (n <= 2) return idx;
  auto turn = [&](int o, int a, int b) {
    return det2(pts[static_cast<size_t>(a)] - pts[static_cast<size_t>(o)],
                pts[static_cast<size_t>(b)] - pts[static_cast<size_t>(o)]);
  };
  std::vector<int> h(static_cast<size_t>(2 * n));
  int k = 0;
  for (int ii = 0; ii < n; ++ii) {
    int i = idx[static_cast<size_t>(ii)];
    while (k >= 2 && turn(h[static_cast<size_t>(k - 2)], h[static_cast<size_t>(k - 1)], i) <= Int(0)) --k;
    h[static_cast<size_t>(k++)] = i;
  }
  const int lower = k + 1;
  for (int ii = n - 2; ii >= 0; --ii) {
    int i = idx[static_cast<size_t>(ii)];
    while (k >= lower && turn(h[static_cast<size_t>(k - 2)], h[static_cast<size_t>(k - 1)], i) <= Int(0)) --k;
    h[static_cast<size_t>(k++)] = i;
  }
  h.resize(static_cast<size_t>(k - 1));
  return h;
}

// Axis whose coordinate can be dropped when projecting the plane with
// normal n; the projection restricted to that plane stays injective.
int drop_axis(const Vec& n) {
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (abs(n[i]) > abs(n[k])) k = i;
  return k;
}

Vec project2(const Vec& v, int k) {
  Vec r = Vec::zero(2);
  int j = 0;
  for (int i = 0; i < 3; ++i)
    if (i != k) r[j++] = v[i];
  return r;
}

struct Tri {
  int a, b, c;
};

// Incremental hull of full-rank 3d points. Points must be sorted and
// distinct; i0..i3 index an affinely independent start tetrahedron. Returns
// outward-oriented boundary triangles.
std::vector<Tri> hull3d(const std::vector<Vec>& p, int i0, int i1, int i2,
                        int i3) {
  auto at = [&](int i) -> const Vec& { return p[static_cast<size_t>(i)]; };
  if (det3(at(i1) - at(i0), at(i2) - at(i0), at(i3) - at(i0)) < Int(0))
    std::swap(i2, i3);
  std::vector<Tri> tris = {
      {i0, i2, i1}, {i0, i1, i3}, {i0, i3, i2}, {i1, i2, i3}};
  auto orient = [&](const Tri& t, int pi) {
    return det3(at(t.b) - at(t.a), at(t.c) - at(t.a), at(pi) - at(t.a));
  };
  const std::set<int> seeded = {i0, i1, i2, i3};
  for (int pi = 0; pi < static_cast<int>(p.size()); ++pi) {
    if (seeded.count(pi)) continue;
    std::vector<char> vis(tris.size(), 0);
    bool any = false;
    for (size_t f = 0; f < tris.size(); ++f) {
      if (orient(tris[f], pi) > Int(0)) {
        vis[f] = 1;
        any = true;
      }
    }
    // No strictly violated facet means the point lies in the current hull
    // and can never be a vertex of the final one.
    if (!any) continue;
    std::set<std::pair<int, int>> ve;
    for (size_t f = 0; f < tris.size(); ++f) {
      if (!vis[f]) continue;
      const Tri& t = tris[f];
      ve.insert({t.a, t.b});
      ve.insert({t.b, t.c});
      ve.insert({t.c, t.a});
    }
    std::vector<Tri> next;
    next.reserve(tris.size());
    for (size_t f = 0; f < tris.size(); ++f)
      if (!vis[f]) next.push_back(tris[f]);
    for (size_t f = 0; f < tris.size(); ++f) {
      if (!vis[f]) continue;
      const Tri& t = tris[f];
      const std::pair<int, int> es[3] = {{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
      for (const auto& e : es)
        if (!ve.count({e.second, e.first}))
          next.push_back({e.first, e.second, pi});  // horizon edge, cone to pi
    }
    tris.swap(next);
  }
  return tris;
}

struct Build {
  int dim = -1;
  std::vector<Vec> verts;
  std::vector<HalfSpace> facets;
};

void push_equation_pair(std::vector<HalfSpace>& fs, const Vec& n, Int value) {
  fs.push_back({n, -value});
  fs.push_back({-n, value});
}

Build build_point(const Vec& p) {
  Build b;
  b.dim = 0;
  b.verts = {p};
  for (int i = 0; i < p.dim(); ++i)
    push_equation_pair(b.facets, Vec::unit(p.dim(), i), p[i]);
  return b;
}

Build build_segment(const std::vector<Vec>& pts) {
  // pts sorted lex and collinear: the endpoints are front and back, and the
  // primitive direction has a positive first nonzero coordinate.
  Build b;
  b.dim = 1;
  const Vec& lo = pts.front();
  const Vec& hi = pts.back();
  Vec t = primitive(hi - lo);
  b.verts = {lo, hi};
  b.facets.push_back({t, -dot(lo, t)});
  b.facets.push_back({-t, dot(hi, t)});
  if (lo.dim() == 2) {
    Vec n = Vec::zero(2);
    n[0] = -t[1];
    n[1] = t[0];
    push_equation_pair(b.facets, primitive(n), dot(lo, n));
  } else {
    // two independent primitive normals spanning the orthogonal plane
    std::vector<Vec> ns;
    for (int i = 0; i < 3 && ns.size() < 2; ++i) {
      Vec c = cross(t, Vec::unit(3, i));
      if (is_zero(c)) continue;
      c = primitive(c);
      if (ns.size() == 1 && is_zero(cross(ns[0], c))) continue;
      ns.push_back(c);
    }
    if (ns.size() != 2) throw std::logic_error("hull: segment normal basis");
    for (const Vec& n : ns) push_equation_pair(b.facets, n, dot(lo, n));
  }
  return b;
}

Build build_polygon2(const std::vector<Vec>& pts) {
  Build b;
  b.dim = 2;
  std::vector<int> cyc = chain2d(pts);
  const int m = static_cast<int>(cyc.size());
  for (int i = 0; i < m; ++i) b.verts.push_back(pts[static_cast<size_t>(cyc[static_cast<size_t>(i)])]);
  for (int i = 0; i < m; ++i) {
    const Vec& a = b.verts[static_cast<size_t>(i)];
    const Vec& c = b.verts[static_cast<size_t>((i + 1) % m)];
    Vec d = c - a;
    Vec n = Vec::zero(2);  // inward normal of a CCW edge
    n[0] = -d[1];
    n[1] = d[0];
    n = primitive(n);
    b.facets.push_back({n, -dot(a, n)});
  }
  return b;
}

Build build_polygon3(const std::vector<Vec>& pts, const Vec& plane_normal) {
  Build b;
  b.dim = 2;
  const Vec n0 = plane_normal;
  const int k = drop_axis(n0);
  std::vector<Vec> proj;
  proj.reserve(pts.size());
  for (const Vec& v : pts) proj.push_back(project2(v, k));
  std::vector<int> cyc = chain2d(proj);
  std::vector<Vec> ring;
  for (int i : cyc) ring.push_back(pts[static_cast<size_t>(i)]);
  // make the ring CCW as seen from the n0 side
  if (dot(cross(ring[1] - ring[0], ring[2] - ring[0]), n0) < Int(0))
    std::reverse(ring.begin(), ring.end());
  const int m = static_cast<int>(ring.size());
  b.verts = ring;
  for (int i = 0; i < m; ++i) {
    const Vec& a = ring[static_cast<size_t>(i)];
    const Vec& c = ring[static_cast<size_t>((i + 1) % m)];
    Vec n = primitive(cross(n0, c - a));  // inward within the plane
    b.facets.push_back({n, -dot(a, n)});
  }
  push_equation_pair(b.facets, n0, dot(pts[0], n0));
  return b;
}

Build build_solid3(const std::vector<Vec>& pts, int i1, int i2, int i3) {
  Build b;
  b.dim = 3;
  std::vector<Tri> soup = hull3d(pts, 0, i1, i2, i3);
  std::map<std::pair<Vec, Int>, std::set<int>> groups;
  for (const Tri& t : soup) {
    const Vec& a = pts[static_cast<size_t>(t.a)];
    Vec n_in = primitive(-cross(pts[static_cast<size_t>(t.b)] - a, pts[static_cast<size_t>(t.c)] - a));
    Int off = -dot(a, n_in);
    auto& g = groups[{n_in, off}];
    g.insert(t.a);
    g.insert(t.b);
    g.insert(t.c);
  }
  std::set<int> vert_idx;
  for (const auto& [key, g] : groups) {
    b.facets.push_back({key.first, key.second});
    // true facet polygon: coplanar soup corners reduced to extreme ones
    std::vector<int> gi(g.begin(), g.end());
    const int k = drop_axis(key.first);
    std::vector<Vec> proj;
    proj.reserve(gi.size());
    for (int i : gi) proj.push_back(project2(pts[static_cast<size_t>(i)], k));
    for (int ci : chain2d(proj)) vert_idx.insert(gi[static_cast<size_t>(ci)]);
  }
  for (int i : vert_idx) b.verts.push_back(pts[static_cast<size_t>(i)]);  // index order = lex order
  return b;
}

void validate(int ambient, const Build& b, const std::vector<Vec>& input) {
  if (b.verts.empty() || b.facets.empty())
    throw std::logic_error("hull: empty result");
  if (!std::is_sorted(b.verts.begin(), b.verts.end()))
    throw std::logic_error("hull: vertices not sorted");
  for (const HalfSpace& f : b.facets) {
    if (!is_primitive(f.normal))
      throw std::logic_error("hull: non-primitive facet normal");
    int tight = 0;
    for (const Vec& v : b.verts) {
      Int s = dot(v, f.normal) + f.offset;
      if (s < Int(0)) throw std::logic_error("hull: vertex outside facet");
      if (s == Int(0)) ++tight;
    }
    if (tight < std::max(1, b.dim))
      throw std::logic_error("hull: facet not tight enough");
    for (const Vec& q : input)
      if (dot(q, f.normal) + f.offset < Int(0))
        throw std::logic_error("hull: input point outside facet");
  }
  (void)ambient;
}

}  // namespace

Polytope hull(const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("hull: empty point set");
  const int d = points[0].dim();
  if (d != 2 && d != 3) throw std::invalid_argument("hull: ambient must be 2 or 3");
  for (const Vec& q : points)
    if (q.dim() != d) throw std::invalid_argument("hull: mixed dimensions");

  std::vector<Vec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const int n = static_cast<int>(pts.size());
  int i1 = n > 1 ? 1 : -1;
  int i2 = -1, i3 = -1;
  if (i1 > 0) {
    const Vec dir = pts[1] - pts[0];
    for (int i = 2; i < n && i2 < 0; ++i) {
      const Vec w = pts[static_cast<size_t>(i)] - pts[0];
      const bool indep = d == 2 ? det2(dir, w) != Int(0) : !is_zero(cross(dir, w));
      if (indep) i2 = i;
    }
  }
  if (d == 3 && i2 > 0) {
    const Vec u = pts[static_cast<size_t>(i1)] - pts[0];
    const Vec v = pts[static_cast<size_t>(i2)] - pts[0];
    for (int i = 2; i < n && i3 < 0; ++i)
      if (det3(u, v, pts[static_cast<size_t>(i)] - pts[0]) != Int(0)) i3 = i;
  }

  Build b;
  if (i1 < 0) {
    b = build_point(pts[0]);
  } else if (i2 < 0) {
    b = build_segment(pts);
  } else if (d == 2) {
    b = build_polygon2(pts);
  } else if (i3 < 0) {
    const Vec n0 = primitive(
        cross(pts[static_cast<size_t>(i1)] - pts[0], pts[static_cast<size_t>(i2)] - pts[0]));
    b = build_polygon3(pts, n0);
  } else {
    b = build_solid3(pts, i1, i2, i3);
  }

  std::sort(b.verts.begin(), b.verts.end());
  b.verts.erase(std::unique(b.verts.begin(), b.verts.end()), b.verts.end());
  std::sort(b.facets.begin(), b.facets.end());
  validate(d, b, pts);

  Polytope P;
  P.ambient_ = d;
  P.dim_ = b.dim;
  P.vertices_ = std::move(b.verts);
  P.facets_ = std::move(b.facets);
  return P;
}

std::vector<Vec> polygon_cycle(const Polytope& P) {
  if (P.dim() != 2) throw std::invalid_argument("polygon_cycle: dim != 2");
  const std::vector<Vec>& vs = P.vertices();
  if (P.ambient_dim() == 2) {
    std::vector<int> cyc = chain2d(vs);
    std::vector<Vec> out;
    for (int i : cyc) out.push_back(vs[static_cast<size_t>(i)]);
    return out;
  }
  // flat polygon in 3-space: project along the affine-hull normal
  for (const HalfSpace& f : P.facets()) {
    int tight = 0;
    for (const Vec& v : vs)
      if (dot(v, f.normal) + f.offset == Int(0)) ++tight;
    if (tight == static_cast<int>(vs.size())) {
      const int k = drop_axis(f.normal);
      std::vector<Vec> proj;
      for (const Vec& v : vs) proj.push_back(project2(v, k));
      std::vector<Vec> out;
      for (int i : chain2d(proj)) out.push_back(vs[static_cast<size_t>(i)]);
      return out;
    }
  }
  throw std::logic_error("polygon_cycle: missing affine-hull equation");
}

std::vector<std::vector<Vec>> facet_cycles(const Polytope& P) {
  if (P.dim() != 3) throw std::invalid_argument("facet_cycles: dim != 3");
  std::vector<std::vector<Vec>> out;
  for (const HalfSpace& f : P.facets()) {
    std::vector<Vec> tight;
    for (const Vec& v : P.vertices())
      if (dot(v, f.normal) + f.offset == Int(0)) tight.push_back(v);
    const int k = drop_axis(f.normal);
    std::vector<Vec> proj;
    for (const Vec& v : tight) proj.push_back(project2(v, k));
    std::vector<Vec> ring;
    for (int i : chain2d(proj)) ring.push_back(tight[static_cast<size_t>(i)]);
    out.push_back(std::move(ring));
  }
  return out;
}

Int normalized_volume(const Polytope& P) {
  if (P.dim() != P.ambient_dim())
    throw std::invalid_argument("normalized_volume: not full-dimensional");
  if (P.dim() == 2) {
    std::vector<Vec> ring = polygon_cycle(P);
    Int vol(0);
    for (size_t i = 1; i + 1 < ring.size(); ++i)
      vol += abs(det2(ring[i] - ring[0], ring[i + 1] - ring[0]));
    return vol;
  }
  // fan over the facets that do not contain the base vertex
  const Vec& base = P.vertices().front();
  std::vector<std::vector<Vec>> cycles = facet_cycles(P);
  Int vol(0);
  for (size_t fi = 0; fi < cycles.size(); ++fi) {
    const HalfSpace& f = P.facets()[fi];
    if (dot(base, f.normal) + f.offset == Int(0)) continue;
    const std::vector<Vec>& ring = cycles[fi];
    for (size_t i = 1; i + 1 < ring.size(); ++i)
      vol += abs(det3(ring[0] - base, ring[i] - base, ring[i + 1] - base));
  }
  return vol;
}

}  // namespace latfano
