// Placing triangulation on the full lattice-point set, in lex insertion
// order, and the empty-simplex decomposition built on it. The complex is
// grown through a degeneracy ladder (collinear chain, flat fan, solid
// tetrahedra); at every step its union is the convex hull of the points
// inserted so far and all inserted points are vertices of the complex, which
// is what makes every final cell empty.

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>

#include "latfano/normality.hpp"

namespace latfano {
namespace {

struct Tet {
  int a, b, c, d;
};

// Triangulation of conv(pts) using every point of pts as a vertex, inserted
// in index order (pts must be lex sorted, distinct, rank 3).
std::vector<Tet> place3(const std::vector<Vec>& pts) {
  const int n = static_cast<int>(pts.size());
  auto at = [&](int i) -> const Vec& { return pts[static_cast<size_t>(i)]; };

  std::vector<std::pair<int, int>> segments;  // phase A: collinear chain
  std::vector<std::array<int, 3>> tris;       // phase B: flat complex
  Vec plane_normal;                           // orients phase B
  std::vector<Tet> tets;                      // phase C

  auto orient_plane = [&](int u, int v, const Vec& p) {
    return dot(cross(at(v) - at(u), p - at(u)), plane_normal);
  };
  auto tri_ccw = [&](std::array<int, 3> t) {
    if (orient_plane(t[0], t[1], at(t[2])) < Int(0)) std::swap(t[1], t[2]);
    return t;
  };
  auto tet_pos = [&](Tet t) {
    if (det3(at(t.b) - at(t.a), at(t.c) - at(t.a), at(t.d) - at(t.a)) <
        Int(0))
      std::swap(t.c, t.d);
    return t;
  };
  // outward-oriented faces of a positively oriented tet
  auto faces_of = [](const Tet& t) {
    return std::array<std::array<int, 3>, 4>{{{t.a, t.c, t.b},
                                              {t.a, t.b, t.d},
                                              {t.a, t.d, t.c},
                                              {t.b, t.c, t.d}}};
  };
  auto face_orient = [&](const std::array<int, 3>& f, const Vec& p) {
    return det3(at(f[1]) - at(f[0]), at(f[2]) - at(f[0]), p - at(f[0]));
  };

  segments.clear();
  int inserted = 0;
  for (int pi = 0; pi < n; ++pi) {
    const Vec& p = at(pi);
    if (!tets.empty()) {
      // phase C insertion
      std::vector<char> inside(tets.size(), 0);
      bool any_inside = false;
      for (size_t t = 0; t < tets.size(); ++t) {
        bool in = true;
        for (const auto& f : faces_of(tets[t]))
          if (face_orient(f, p) > Int(0)) {
            in = false;
            break;
          }
        if (in) {
          inside[t] = 1;
          any_inside = true;
        }
      }
      std::vector<Tet> next;
      next.reserve(tets.size() + 4);
      if (any_inside) {
        for (size_t t = 0; t < tets.size(); ++t) {
          if (!inside[t]) {
            next.push_back(tets[t]);
            continue;
          }
          for (const auto& f : faces_of(tets[t]))
            if (face_orient(f, p) < Int(0))
              next.push_back(tet_pos({f[0], f[1], f[2], pi}));
        }
      } else {
        // boundary faces: outward faces whose reverse is in no other tet
        std::map<std::array<int, 3>, int> count;  // sorted key -> occurrences
        for (const Tet& t : tets)
          for (const auto& f : faces_of(t)) {
            std::array<int, 3> key = f;
            std::sort(key.begin(), key.end());
            ++count[key];
          }
        next = tets;
        for (const Tet& t : tets)
          for (const auto& f : faces_of(t)) {
            std::array<int, 3> key = f;
            std::sort(key.begin(), key.end());
            if (count[key] != 1) continue;
            if (face_orient(f, p) > Int(0))
              next.push_back(tet_pos({f[0], f[1], f[2], pi}));
          }
      }
      tets.swap(next);
    } else if (!tris.empty()) {
      // phase B: still flat. Off-plane point lifts the whole complex.
      Int lift = dot(p - at(0), plane_normal);
      if (lift != Int(0)) {
        for (const auto& t : tris) tets.push_back(tet_pos({t[0], t[1], t[2], pi}));
      } else {
        std::vector<char> inside(tris.size(), 0);
        bool any_inside = false;
        for (size_t t = 0; t < tris.size(); ++t) {
          const auto& tr = tris[t];
          const int e[3][2] = {{tr[0], tr[1]}, {tr[1], tr[2]}, {tr[2], tr[0]}};
          bool in = true;
          for (const auto& ed : e)
            if (orient_plane(ed[0], ed[1], p) < Int(0)) {
              in = false;
              break;
            }
          if (in) {
            inside[t] = 1;
            any_inside = true;
          }
        }
        std::vector<std::array<int, 3>> next;
        next.reserve(tris.size() + 3);
        if (any_inside) {
          for (size_t t = 0; t < tris.size(); ++t) {
            const auto& tr = tris[t];
            if (!inside[t]) {
              next.push_back(tr);
              continue;
            }
            const int e[3][2] = {{tr[0], tr[1]}, {tr[1], tr[2]}, {tr[2], tr[0]}};
            for (const auto& ed : e)
              if (orient_plane(ed[0], ed[1], p) > Int(0))
                next.push_back(tri_ccw({ed[0], ed[1], pi}));
          }
        } else {
          std::map<std::pair<int, int>, int> count;
          for (const auto& tr : tris) {
            const int e[3][2] = {{tr[0], tr[1]}, {tr[1], tr[2]}, {tr[2], tr[0]}};
            for (const auto& ed : e) {
              std::pair<int, int> key = std::minmax(ed[0], ed[1]);
              ++count[key];
            }
          }
          next = tris;
          for (const auto& tr : tris) {
            const int e[3][2] = {{tr[0], tr[1]}, {tr[1], tr[2]}, {tr[2], tr[0]}};
            for (const auto& ed : e) {
              std::pair<int, int> key = std::minmax(ed[0], ed[1]);
              if (count[key] != 1) continue;
              // boundary edge of the CCW complex; visible means p to its right
              if (orient_plane(ed[0], ed[1], p) < Int(0))
                next.push_back(tri_ccw({ed[0], ed[1], pi}));
            }
          }
        }
        tris.swap(next);
      }
    } else if (inserted >= 2) {
      // phase A: collinear so far; lex order walks along the line
      const Vec dir = at(1) - at(0);
      if (is_zero(cross(dir, p - at(0)))) {
        segments.push_back({inserted - 1, pi});
      } else {
        plane_normal = cross(dir, p - at(0));
        for (const auto& s : segments)
          tris.push_back(tri_ccw({s.first, s.second, pi}));
      }
    } else if (inserted == 1) {
      segments.push_back({0, pi});
    }
    ++inserted;
  }
  if (tets.empty()) throw std::logic_error("place3: points not full rank");
  return tets;
}

bool vertex_list_less(const Polytope& a, const Polytope& b) {
  return std::lexicographical_compare(a.vertices().begin(), a.vertices().end(),
                                      b.vertices().begin(), b.vertices().end());
}

}  // namespace

Decomposition decompose_empty_simplices(const Polytope& Q) {
  if (Q.ambient_dim() != 3 || Q.dim() != 3)
    throw std::invalid_argument(
        "decompose_empty_simplices: need a full-dimensional 3-polytope");
  const std::vector<Vec> pts = lattice_points(Q);
  std::vector<Tet> tets = place3(pts);

  std::vector<Polytope> pieces;
  pieces.reserve(tets.size());
  for (const Tet& t : tets)
    pieces.push_back(hull({pts[static_cast<size_t>(t.a)],
                           pts[static_cast<size_t>(t.b)],
                           pts[static_cast<size_t>(t.c)],
                           pts[static_cast<size_t>(t.d)]}));
  std::sort(pieces.begin(), pieces.end(), vertex_list_less);

  Int total(0);
  Decomposition out;
  for (const Polytope& piece : pieces) {
    if (piece.vertices().size() != 4)
      throw std::logic_error("decompose_empty_simplices: degenerate cell");
    if (lattice_points(piece).size() != 4)
      throw std::logic_error("decompose_empty_simplices: cell not empty");
    total += normalized_volume(piece);
    std::optional<WidthCertificate> cert = width_certificate(piece);
    if (!cert)
      throw std::runtime_error(
          "decompose_empty_simplices: width certificate search exhausted on "
          "an empty simplex");
    // exact re-verification of the certificate on the piece
    for (const Vec& v : piece.vertices()) {
      Int s = dot(cert->direction, v);
      if (s < cert->base || s > cert->base + Int(1))
        throw std::logic_error(
            "decompose_empty_simplices: invalid width certificate");
    }
    out.certificates.push_back(*cert);
  }
  if (total != normalized_volume(Q))
    throw std::logic_error("decompose_empty_simplices: volumes not additive");
  out.pieces = std::move(pieces);
  return out;
}

}  // namespace latfano
