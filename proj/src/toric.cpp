// Fans, divisors and the nef / fixed-component calculus. Fan construction
// validates completeness exactly: rank 2 by the angular cycle of rays, rank 3
// by directed-wall pairing (each wall shared by exactly two cones sitting on
// opposite sides) plus degree and coverage probes.

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "latfano/toric.hpp"

namespace latfano {
namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

const Vec& ray_of(const std::vector<Vec>& rays, int i) {
  return rays[static_cast<size_t>(i)];
}

// closed-cone membership, exact: p = sum alpha_i v_i with alpha_i >= 0
bool in_cone(const std::vector<Vec>& rays, const Cone& c, const Vec& p) {
  if (p.dim() == 2) {
    const Vec& a = ray_of(rays, c.ray_indices[0]);
    const Vec& b = ray_of(rays, c.ray_indices[1]);
    const int s = sgn(det2(a, b));
    return sgn(det2(p, b)) * s >= 0 && sgn(det2(a, p)) * s >= 0;
  }
  const Vec& a = ray_of(rays, c.ray_indices[0]);
  const Vec& b = ray_of(rays, c.ray_indices[1]);
  const Vec& d = ray_of(rays, c.ray_indices[2]);
  const int s = sgn(det3(a, b, d));
  return sgn(det3(p, b, d)) * s >= 0 && sgn(det3(a, p, d)) * s >= 0 &&
         sgn(det3(a, b, p)) * s >= 0;
}

// 0 for the upper half (y > 0, or y = 0 and x > 0), 1 for the lower
int half_plane(const Vec& v) {
  if (v[1] > Int(0)) return 0;
  if (v[1] == Int(0) && v[0] > Int(0)) return 0;
  return 1;
}

bool angular_less(const Vec& a, const Vec& b) {
  const int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return det2(a, b) > Int(0);
}

void validate_complete2(const std::vector<Vec>& rays,
                        const std::vector<Cone>& cones) {
  const int nr = static_cast<int>(rays.size());
  std::vector<int> order(static_cast<size_t>(nr));
  for (int i = 0; i < nr; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return angular_less(ray_of(rays, i), ray_of(rays, j));
  });
  std::set<Cone> expected;
  for (int i = 0; i < nr; ++i) {
    const int u = order[static_cast<size_t>(i)];
    const int v = order[static_cast<size_t>((i + 1) % nr)];
    if (det2(ray_of(rays, u), ray_of(rays, v)) <= Int(0))
      throw std::invalid_argument(
          "make_fan: rays do not close up into a complete 2-fan");
    Cone c{{std::min(u, v), std::max(u, v)}};
    expected.insert(c);
  }
  std::set<Cone> given(cones.begin(), cones.end());
  if (given != expected)
    throw std::invalid_argument(
        "make_fan: max cones are not the consecutive ray pairs of a complete "
        "2-fan");
}

void validate_complete3(const std::vector<Vec>& rays,
                        const std::vector<Cone>& cones) {
  // directed walls from positively oriented cone traversals
  std::map<std::pair<int, int>, int> walls;
  for (const Cone& c : cones) {
    int i = c.ray_indices[0], j = c.ray_indices[1], k = c.ray_indices[2];
    if (det3(ray_of(rays, i), ray_of(rays, j), ray_of(rays, k)) < Int(0))
      std::swap(j, k);
    ++walls[{i, j}];
    ++walls[{j, k}];
    ++walls[{k, i}];
  }
  for (const auto& [w, count] : walls) {
    auto rev = walls.find({w.second, w.first});
    if (count != 1 || rev == walls.end() || rev->second != 1)
      throw std::invalid_argument(
          "make_fan: wall structure is not that of a complete fan");
  }
  // degree probe: an interior point of cone 0 must lie in no other cone
  const Cone& c0 = cones.front();
  Vec g = ray_of(rays, c0.ray_indices[0]) + ray_of(rays, c0.ray_indices[1]) +
          ray_of(rays, c0.ray_indices[2]);
  if (!in_cone(rays, c0, g))
    throw std::logic_error("make_fan: cone does not contain its own interior");
  for (size_t t = 1; t < cones.size(); ++t)
    if (in_cone(rays, cones[t], g))
      throw std::invalid_argument("make_fan: overlapping max cones");
  // coverage probes
  std::vector<Vec> probes;
  for (int axis = 0; axis < 3; ++axis)
    for (int sign = -1; sign <= 1; sign += 2) {
      Vec p = Vec::zero(3);
      p[axis] = Int(sign);
      probes.push_back(p);
    }
  for (long long sx = -1; sx <= 1; sx += 2)
    for (long long sy = -1; sy <= 1; sy += 2)
      for (long long sz = -1; sz <= 1; sz += 2) probes.push_back(Vec{sx, sy, sz});
  for (const Vec& p : probes) {
    bool covered = false;
    for (const Cone& c : cones)
      if (in_cone(rays, c, p)) {
        covered = true;
        break;
      }
    if (!covered)
      throw std::invalid_argument("make_fan: fan does not cover N_R");
  }
}

// exact solve of <u, row_i> = rhs_i over the cone's rays
RatVec solve_support(const std::vector<Vec>& rows, const std::vector<Int>& rhs) {
  if (rows[0].dim() == 2) {
    const Vec& a = rows[0];
    const Vec& b = rows[1];
    Int D = det2(a, b);
    if (D == Int(0)) throw std::logic_error("support point: singular system");
    RatVec u(2);
    u[0] = Rat(rhs[0] * b[1] - a[1] * rhs[1], D);
    u[1] = Rat(a[0] * rhs[1] - rhs[0] * b[0], D);
    return u;
  }
  const Vec& a = rows[0];
  const Vec& b = rows[1];
  const Vec& c = rows[2];
  Int D = det3(a, b, c);
  if (D == Int(0)) throw std::logic_error("support point: singular system");
  const Vec cbc = cross(b, c), cca = cross(c, a), cab = cross(a, b);
  RatVec u(3);
  for (int t = 0; t < 3; ++t)
    u[t] = Rat(rhs[0] * cbc[t] + rhs[1] * cca[t] + rhs[2] * cab[t], D);
  return u;
}

std::vector<HalfSpace> divisor_system(const Fan& F, const TDivisor& D) {
  if (D.coeffs.size() != F.rays().size())
    throw std::invalid_argument("divisor does not match the fan's rays");
  std::vector<HalfSpace> hs;
  hs.reserve(F.rays().size());
  for (size_t i = 0; i < F.rays().size(); ++i)
    hs.push_back({F.rays()[i], D.coeffs[i]});
  return hs;
}

std::vector<Int> fixed_components_from(const Fan& F, const TDivisor& D,
                                       const std::vector<Vec>& pts) {
  std::vector<Int> cs;
  cs.reserve(F.rays().size());
  for (size_t i = 0; i < F.rays().size(); ++i) {
    Int best = dot(pts[0], F.rays()[i]) + D.coeffs[i];
    for (const Vec& m : pts) {
      Int v = dot(m, F.rays()[i]) + D.coeffs[i];
      if (v < best) best = v;
    }
    cs.push_back(best);
  }
  return cs;
}

}  // namespace

int Fan::ray_index(const Vec& ray) const {
  auto it = std::lower_bound(rays_.begin(), rays_.end(), ray);
  if (it == rays_.end() || *it != ray) return -1;
  return static_cast<int>(it - rays_.begin());
}

Fan make_fan(const std::vector<Vec>& rays,
             const std::vector<std::vector<int>>& max_cones) {
  if (rays.empty()) throw std::invalid_argument("make_fan: no rays");
  const int d = rays[0].dim();
  if (d != 2 && d != 3)
    throw std::invalid_argument("make_fan: rank must be 2 or 3");
  for (const Vec& r : rays) {
    if (r.dim() != d) throw std::invalid_argument("make_fan: mixed ray dims");
    if (!is_primitive(r))
      throw std::invalid_argument("make_fan: ray not primitive");
  }

  std::vector<Vec> sorted = rays;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("make_fan: duplicate rays");
  auto canon_index = [&](int old_index) {
    const Vec& r = rays[static_cast<size_t>(old_index)];
    return static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), r) - sorted.begin());
  };

  std::vector<Cone> cones;
  cones.reserve(max_cones.size());
  std::vector<char> used(rays.size(), 0);
  for (const std::vector<int>& c : max_cones) {
    if (static_cast<int>(c.size()) != d)
      throw std::invalid_argument("make_fan: cone arity must equal the rank");
    Cone cc;
    for (int i : c) {
      if (i < 0 || i >= static_cast<int>(rays.size()))
        throw std::invalid_argument("make_fan: cone ray index out of range");
      used[static_cast<size_t>(i)] = 1;
      cc.ray_indices.push_back(canon_index(i));
    }
    std::sort(cc.ray_indices.begin(), cc.ray_indices.end());
    if (std::adjacent_find(cc.ray_indices.begin(), cc.ray_indices.end()) !=
        cc.ray_indices.end())
      throw std::invalid_argument("make_fan: repeated ray in a cone");
    // simplicial: spanning rays independent
    if (d == 2) {
      if (det2(sorted[static_cast<size_t>(cc.ray_indices[0])],
               sorted[static_cast<size_t>(cc.ray_indices[1])]) == Int(0))
        throw std::invalid_argument("make_fan: degenerate cone");
    } else {
      if (det3(sorted[static_cast<size_t>(cc.ray_indices[0])],
               sorted[static_cast<size_t>(cc.ray_indices[1])],
               sorted[static_cast<size_t>(cc.ray_indices[2])]) == Int(0))
        throw std::invalid_argument("make_fan: degenerate cone");
    }
    cones.push_back(std::move(cc));
  }
  if (std::find(used.begin(), used.end(), 0) != used.end())
    throw std::invalid_argument("make_fan: unused ray");
  std::sort(cones.begin(), cones.end());
  if (std::adjacent_find(cones.begin(), cones.end()) != cones.end())
    throw std::invalid_argument("make_fan: duplicate cones");

  if (d == 2)
    validate_complete2(sorted, cones);
  else
    validate_complete3(sorted, cones);

  Fan F;
  F.dim_ = d;
  F.rays_ = std::move(sorted);
  F.max_cones_ = std::move(cones);
  return F;
}

std::pair<Fan, TDivisor> make_fan(const std::vector<Vec>& rays,
                                  const std::vector<std::vector<int>>& max_cones,
                                  const std::vector<Int>& coeffs) {
  if (coeffs.size() != rays.size())
    throw std::invalid_argument("make_fan: divisor length must match rays");
  Fan F = make_fan(rays, max_cones);
  TDivisor D;
  D.coeffs.assign(rays.size(), Int(0));
  for (size_t i = 0; i < rays.size(); ++i)
    D.coeffs[static_cast<size_t>(F.ray_index(rays[i]))] = coeffs[i];
  return {std::move(F), std::move(D)};
}

std::pair<Fan, TDivisor> normal_fan(const Polytope& P) {
  if (P.dim() != P.ambient_dim())
    throw std::invalid_argument("normal_fan: polytope not full-dimensional");
  const std::vector<HalfSpace>& fs = P.facets();
  std::vector<Vec> rays;
  std::vector<Int> coeffs;
  for (const HalfSpace& f : fs) {
    rays.push_back(f.normal);
    coeffs.push_back(f.offset);
  }
  std::vector<std::vector<int>> cones;
  for (const Vec& v : P.vertices()) {
    std::vector<int> tight;
    for (size_t i = 0; i < fs.size(); ++i)
      if (dot(v, fs[i].normal) + fs[i].offset == Int(0))
        tight.push_back(static_cast<int>(i));
    if (static_cast<int>(tight.size()) != P.dim())
      throw std::invalid_argument(
          "normal_fan: polytope is not simple, vertex cone not simplicial");
    cones.push_back(std::move(tight));
  }
  return make_fan(rays, cones, coeffs);
}

bool is_smooth(const Fan& F) {
  for (const Cone& c : F.max_cones()) {
    Int D = F.dim() == 2
                ? det2(F.rays()[static_cast<size_t>(c.ray_indices[0])],
                       F.rays()[static_cast<size_t>(c.ray_indices[1])])
                : det3(F.rays()[static_cast<size_t>(c.ray_indices[0])],
                       F.rays()[static_cast<size_t>(c.ray_indices[1])],
                       F.rays()[static_cast<size_t>(c.ray_indices[2])]);
    if (D != Int(1) && D != Int(-1)) return false;
  }
  return true;
}

TDivisor anticanonical(const Fan& F) {
  TDivisor D;
  D.coeffs.assign(F.rays().size(), Int(1));
  return D;
}

NonIntegralVertexError::NonIntegralVertexError(const RatVec& w)
    : std::runtime_error("section polytope has a non-integral vertex " +
                         to_string(w)),
      witness(w) {}

std::optional<Polytope> polytope_of_divisor(const Fan& F, const TDivisor& D) {
  std::vector<HalfSpace> hs = divisor_system(F, D);
  std::vector<RatVec> basics = feasible_basic_solutions(hs, F.dim());
  if (basics.empty()) return std::nullopt;
  std::vector<Vec> vs;
  vs.reserve(basics.size());
  for (const RatVec& v : basics) {
    if (!v.is_integral()) throw NonIntegralVertexError(v);
    vs.push_back(v.to_vec());
  }
  return hull(vs);
}

RatVec cone_support_point(const Fan& F, const TDivisor& D, const Cone& sigma) {
  if (static_cast<int>(sigma.ray_indices.size()) != F.dim())
    throw std::invalid_argument("cone_support_point: not a max cone");
  if (D.coeffs.size() != F.rays().size())
    throw std::invalid_argument("cone_support_point: divisor length");
  std::vector<Vec> rows;
  std::vector<Int> rhs;
  for (int i : sigma.ray_indices) {
    if (i < 0 || i >= static_cast<int>(F.rays().size()))
      throw std::invalid_argument("cone_support_point: ray index");
    rows.push_back(F.rays()[static_cast<size_t>(i)]);
    rhs.push_back(-D.coeffs[static_cast<size_t>(i)]);
  }
  return solve_support(rows, rhs);
}

bool is_nef(const Fan& F, const TDivisor& D) {
  if (!is_smooth(F))
    throw std::invalid_argument("is_nef: fan not smooth");
  std::vector<HalfSpace> hs = divisor_system(F, D);
  for (const Cone& c : F.max_cones()) {
    RatVec u = cone_support_point(F, D, c);
    if (!u.is_integral()) return false;
    const Vec m = u.to_vec();
    for (const HalfSpace& f : hs)
      if (dot(m, f.normal) + f.offset < Int(0)) return false;
  }
  return true;
}

std::vector<Int> fixed_components(const Fan& F, const TDivisor& D) {
  std::vector<HalfSpace> hs = divisor_system(F, D);
  std::vector<Vec> pts = lattice_points_of_system(hs, F.dim());
  if (pts.empty())
    throw std::invalid_argument("fixed_components: the linear system is empty");
  return fixed_components_from(F, D, pts);
}

CheckReport verify_surface_bpf(const Fan& F, const TDivisor& D) {
  if (F.dim() != 2)
    throw std::invalid_argument("verify_surface_bpf: fan rank must be 2");
  const auto t0 = Clock::now();
  CheckReport r;
  r.check = "surface-bpf";
  r.holds = true;
  auto skip = [&](const char* why) {
    r.check += std::string(":skipped-") + why;
    r.elapsed_ms = ms_since(t0);
    return r;
  };
  if (!is_smooth(F)) return skip("not-smooth");
  std::vector<HalfSpace> hs = divisor_system(F, D);
  std::vector<Vec> pts = lattice_points_of_system(hs, 2);
  if (pts.empty()) return skip("empty-system");
  for (Int c : fixed_components_from(F, D, pts))
    if (c != Int(0)) return skip("fixed-components");

  long long good = 0;
  std::vector<Vec> bad;
  for (const Cone& c : F.max_cones()) {
    RatVec u = cone_support_point(F, D, c);
    if (!u.is_integral())
      throw std::logic_error(
          "verify_surface_bpf: non-integral support point on a smooth fan");
    const Vec m = u.to_vec();
    bool in = true;
    for (const HalfSpace& f : hs)
      if (dot(m, f.normal) + f.offset < Int(0)) {
        in = false;
        break;
      }
    if (in)
      ++good;
    else
      bad.push_back(m);
  }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  r.gap_points = std::move(bad);
  r.holds = r.gap_points.empty();
  r.lhs_count = good;
  r.rhs_count = static_cast<long long>(F.max_cones().size());
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::optional<Polytope> adjoint_polytope(const Polytope& P) {
  if (P.dim() != P.ambient_dim())
    throw std::invalid_argument("adjoint_polytope: not full-dimensional");
  std::vector<Vec> interior = interior_lattice_points(P);
  if (interior.empty()) return std::nullopt;
  return hull(interior);
}

}  // namespace latfano
