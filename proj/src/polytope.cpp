// Polytope operations: lattice-point enumeration (the parallel kernel),
// Minkowski arithmetic, polar duality, reflexivity, lattice width, and the
// exact solver for rational H-polytopes.

#include <algorithm>
#include <array>
#include <exception>
#include <stdexcept>

#include "latfano/parallel.hpp"
#include "latfano/polytope.hpp"

namespace latfano {
namespace {

void vertex_box(const Polytope& P, std::array<long long, 3>& lo,
                std::array<long long, 3>& hi) {
  const std::vector<Vec>& vs = P.vertices();
  for (int k = 0; k < P.ambient_dim(); ++k) {
    Int mn = vs[0][k], mx = vs[0][k];
    for (const Vec& v : vs) {
      mn = std::min(mn, v[k]);
      mx = std::max(mx, v[k]);
    }
    lo[static_cast<size_t>(k)] = mn.value();
    hi[static_cast<size_t>(k)] = mx.value();
  }
}

// Row scan over a box, constrained by <y, n> + off >= (strict ? 1 : 0) for
// every halfspace. The innermost axis is tightened to an exact interval per
// row; outer slices run in parallel and are concatenated in order, so the
// output is lex sorted and independent of the thread count.
std::vector<Vec> scan_box(const std::vector<HalfSpace>& hs, int d,
                          const std::array<long long, 3>& lo,
                          const std::array<long long, 3>& hi, bool strict) {
  for (int k = 0; k < d; ++k)
    if (lo[static_cast<size_t>(k)] > hi[static_cast<size_t>(k)]) return {};
  const Int want = strict ? Int(1) : Int(0);
  const long long nx = hi[0] - lo[0] + 1;
  std::vector<std::vector<Vec>> slices(static_cast<size_t>(nx));
  std::exception_ptr err = nullptr;
  const int eff = effective_threads();
  (void)eff;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(eff) if (eff > 1)
#endif
  for (long long s = 0; s < nx; ++s) {
    try {
      const long long x = lo[0] + s;
      std::vector<Vec>& out = slices[static_cast<size_t>(s)];
      if (d == 2) {
        long long ylo = lo[1], yhi = hi[1];
        bool empty = false;
        for (const HalfSpace& f : hs) {
          Int c = want - f.offset - f.normal[0] * Int(x);
          if (f.normal[1] > Int(0))
            ylo = std::max(ylo, ceildiv(c, f.normal[1]).value());
          else if (f.normal[1] < Int(0))
            yhi = std::min(yhi, floordiv(c, f.normal[1]).value());
          else if (c > Int(0)) {
            empty = true;
            break;
          }
        }
        if (!empty)
          for (long long y = ylo; y <= yhi; ++y) out.push_back(Vec{x, y});
      } else {
        for (long long y = lo[1]; y <= hi[1]; ++y) {
          long long zlo = lo[2], zhi = hi[2];
          bool empty = false;
          for (const HalfSpace& f : hs) {
            Int c = want - f.offset - f.normal[0] * Int(x) - f.normal[1] * Int(y);
            if (f.normal[2] > Int(0))
              zlo = std::max(zlo, ceildiv(c, f.normal[2]).value());
            else if (f.normal[2] < Int(0))
              zhi = std::min(zhi, floordiv(c, f.normal[2]).value());
            else if (c > Int(0)) {
              empty = true;
              break;
            }
          }
          if (empty) continue;
          for (long long z = zlo; z <= zhi; ++z) out.push_back(Vec{x, y, z});
        }
      }
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(latfano_scan_err)
#endif
      {
        if (!err) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
  size_t total = 0;
  for (const auto& sl : slices) total += sl.size();
  std::vector<Vec> out;
  out.reserve(total);
  for (auto& sl : slices) out.insert(out.end(), sl.begin(), sl.end());
  return out;
}

}  // namespace

std::vector<Vec> lattice_points(const Polytope& P) {
  std::array<long long, 3> lo{}, hi{};
  vertex_box(P, lo, hi);
  return scan_box(P.facets(), P.ambient_dim(), lo, hi, /*strict=*/false);
}

std::vector<Vec> interior_lattice_points(const Polytope& P) {
  if (P.dim() < P.ambient_dim()) return {};
  std::array<long long, 3> lo{}, hi{};
  vertex_box(P, lo, hi);
  return scan_box(P.facets(), P.ambient_dim(), lo, hi, /*strict=*/true);
}

Polytope minkowski_sum(const Polytope& P, const Polytope& Q) {
  if (P.ambient_dim() != Q.ambient_dim())
    throw std::invalid_argument("minkowski_sum: ambient dimension mismatch");
  std::vector<Vec> sums;
  sums.reserve(P.vertices().size() * Q.vertices().size());
  for (const Vec& a : P.vertices())
    for (const Vec& b : Q.vertices()) sums.push_back(a + b);
  return hull(sums);
}

Polytope dilate(const Polytope& P, Int k) {
  if (k < Int(1)) throw std::invalid_argument("dilate: factor must be >= 1");
  std::vector<Vec> vs;
  vs.reserve(P.vertices().size());
  for (const Vec& v : P.vertices()) vs.push_back(k * v);
  return hull(vs);
}

Polytope translate(const Polytope& P, const Vec& t) {
  if (t.dim() != P.ambient_dim())
    throw std::invalid_argument("translate: dimension mismatch");
  std::vector<Vec> vs;
  vs.reserve(P.vertices().size());
  for (const Vec& v : P.vertices()) vs.push_back(v + t);
  return hull(vs);
}

bool contains(const Polytope& P, const Vec& m) {
  if (m.dim() != P.ambient_dim())
    throw std::invalid_argument("contains: dimension mismatch");
  for (const HalfSpace& f : P.facets())
    if (dot(m, f.normal) + f.offset < Int(0)) return false;
  return true;
}

PolarDualResult polar_dual(const Polytope& P) {
  if (P.dim() != P.ambient_dim())
    throw std::invalid_argument("polar_dual: polytope not full-dimensional");
  for (const HalfSpace& f : P.facets())
    if (f.offset <= Int(0))
      throw std::invalid_argument("polar_dual: origin not strictly interior");
  std::vector<RatVec> cand;
  cand.reserve(P.facets().size());
  for (const HalfSpace& f : P.facets()) {
    RatVec v(P.ambient_dim());
    for (int k = 0; k < P.ambient_dim(); ++k) v[k] = Rat(f.normal[k], f.offset);
    cand.push_back(v);
  }
  std::sort(cand.begin(), cand.end());
  for (const RatVec& v : cand)
    if (!v.is_integral()) return {std::nullopt, v};
  std::vector<Vec> vs;
  vs.reserve(cand.size());
  for (const RatVec& v : cand) vs.push_back(v.to_vec());
  return {hull(vs), std::nullopt};
}

ReflexivityResult is_reflexive(const Polytope& P) {
  if (P.dim() != P.ambient_dim())
    return {false, NotReflexiveReason::not_full_dimensional};
  for (const HalfSpace& f : P.facets())
    if (f.offset < Int(1))
      return {false, NotReflexiveReason::origin_not_interior};
  for (const HalfSpace& f : P.facets())
    if (f.offset != Int(1))
      return {false, NotReflexiveReason::facet_offset_not_one};
  return {true, NotReflexiveReason::none};
}

std::optional<WidthCertificate> width_certificate(const Polytope& P,
                                                  Int bound) {
  if (bound < Int(1))
    throw std::invalid_argument("width_certificate: bound must be >= 1");
  const int d = P.ambient_dim();
  const std::vector<Vec>& vs = P.vertices();
  const long long b = bound.value();
  auto spread_ok = [&](const Vec& m) -> std::optional<Int> {
    Int mn = dot(m, vs[0]), mx = mn;
    for (const Vec& v : vs) {
      Int s = dot(m, v);
      mn = std::min(mn, s);
      mx = std::max(mx, s);
      if (mx - mn > Int(1)) return std::nullopt;
    }
    return mn;
  };
  auto consider = [&](const Vec& m) -> bool {
    int first = 0;
    while (first < d && m[first] == Int(0)) ++first;
    if (first == d) return false;               // zero direction
    if (m[first] < Int(0)) return false;        // sign-normalized reps only
    if (!is_primitive(m)) return false;
    return true;
  };
  if (d == 2) {
    for (long long x = -b; x <= b; ++x)
      for (long long y = -b; y <= b; ++y) {
        Vec m{x, y};
        if (!consider(m)) continue;
        if (auto base = spread_ok(m)) return WidthCertificate{m, *base};
      }
  } else {
    for (long long x = -b; x <= b; ++x)
      for (long long y = -b; y <= b; ++y)
        for (long long z = -b; z <= b; ++z) {
          Vec m{x, y, z};
          if (!consider(m)) continue;
          if (auto base = spread_ok(m)) return WidthCertificate{m, *base};
        }
  }
  return std::nullopt;
}

std::optional<WidthCertificate> width_certificate(const Polytope& P) {
  Int b(1);
  for (const HalfSpace& f : P.facets())
    for (int k = 0; k < P.ambient_dim(); ++k) b = std::max(b, abs(f.normal[k]));
  auto r = width_certificate(P, b);
  if (!r) r = width_certificate(P, b + b);
  return r;
}

std::vector<RatVec> feasible_basic_solutions(
    const std::vector<HalfSpace>& halfspaces, int dim) {
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("feasible_basic_solutions: dim must be 2 or 3");
  for (const HalfSpace& f : halfspaces)
    if (f.normal.dim() != dim)
      throw std::invalid_argument("feasible_basic_solutions: normal dimension");
  const int n = static_cast<int>(halfspaces.size());
  auto feasible = [&](const RatVec& u) {
    for (const HalfSpace& f : halfspaces) {
      Rat s(Int(0));
      for (int k = 0; k < dim; ++k) s = s + u[k] * Rat(f.normal[k]);
      if (s + Rat(f.offset) < Rat(Int(0))) return false;
    }
    return true;
  };
  std::vector<RatVec> out;
  if (dim == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Vec& ni = halfspaces[static_cast<size_t>(i)].normal;
        const Vec& nj = halfspaces[static_cast<size_t>(j)].normal;
        Int D = det2(ni, nj);
        if (D == Int(0)) continue;
        Int b0 = -halfspaces[static_cast<size_t>(i)].offset;
        Int b1 = -halfspaces[static_cast<size_t>(j)].offset;
        RatVec u(2);
        u[0] = Rat(b0 * nj[1] - ni[1] * b1, D);
        u[1] = Rat(ni[0] * b1 - b0 * nj[0], D);
        if (feasible(u)) out.push_back(u);
      }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          const Vec& r1 = halfspaces[static_cast<size_t>(i)].normal;
          const Vec& r2 = halfspaces[static_cast<size_t>(j)].normal;
          const Vec& r3 = halfspaces[static_cast<size_t>(k)].normal;
          Int D = det3(r1, r2, r3);
          if (D == Int(0)) continue;
          // u solves rows * u = b via the dual basis of cross products
          Vec c23 = cross(r2, r3), c31 = cross(r3, r1), c12 = cross(r1, r2);
          Int b1 = -halfspaces[static_cast<size_t>(i)].offset;
          Int b2 = -halfspaces[static_cast<size_t>(j)].offset;
          Int b3 = -halfspaces[static_cast<size_t>(k)].offset;
          RatVec u(3);
          for (int t = 0; t < 3; ++t)
            u[t] = Rat(b1 * c23[t] + b2 * c31[t] + b3 * c12[t], D);
          if (feasible(u)) out.push_back(u);
        }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vec> lattice_points_of_system(
    const std::vector<HalfSpace>& halfspaces, int dim) {
  std::vector<RatVec> verts = feasible_basic_solutions(halfspaces, dim);
  if (verts.empty()) return {};
  std::array<long long, 3> lo{}, hi{};
  for (int k = 0; k < dim; ++k) {
    Rat mn = verts[0][k], mx = verts[0][k];
    for (const RatVec& v : verts) {
      if (v[k] < mn) mn = v[k];
      if (mx < v[k]) mx = v[k];
    }
    lo[static_cast<size_t>(k)] = mn.ceil().value();
    hi[static_cast<size_t>(k)] = mx.floor().value();
  }
  return scan_box(halfspaces, dim, lo, hi, /*strict=*/false);
}

}  // namespace latfano
