// Lattice polytopes with exact V- and H-representations, dimensions 2 and 3.
#pragma once

#include <optional>
#include <vector>

#include "latfano/vec.hpp"

namespace latfano {

/// Closed halfspace { y : <y, normal> >= -offset } with primitive normal.
struct HalfSpace {
  Vec normal;
  Int offset;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend std::strong_ordering operator<=>(const HalfSpace&,
                                          const HalfSpace&) = default;
};

/// Witness that a polytope has lattice width <= 1 in direction m:
/// base <= <direction, y> <= base + 1 on every vertex y.
struct WidthCertificate {
  Vec direction;
  Int base;

  friend bool operator==(const WidthCertificate&,
                         const WidthCertificate&) = default;
};

/// Convex hull of finitely many lattice points, stored canonically:
/// vertices are the extreme points in lex order, facets are irredundant and
/// sorted by (normal, offset). A polytope of dimension k < ambient carries
/// the affine-hull equations as opposite halfspace pairs next to the
/// relative facet cuts, so membership is always "satisfies every halfspace".
/// Instances are immutable; construct through hull().
class Polytope {
 public:
  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& facets() const { return facets_; }

  // Canonical vertex lists make equality a plain comparison.
  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_ == b.ambient_ && a.vertices_ == b.vertices_;
  }

 private:
  Polytope() = default;
  friend Polytope hull(const std::vector<Vec>& points);

  int ambient_ = 0;
  int dim_ = -1;
  std::vector<Vec> vertices_;
  std::vector<HalfSpace> facets_;
};

/// Exact convex hull. Handles every degeneracy ladder step in ambient
/// dimension 2 or 3 (point, segment, polygon, solid).
Polytope hull(const std::vector<Vec>& points);

/// All lattice points of P, lex sorted. Scans the bounding box with the
/// innermost axis tightened per row from the facet inequalities; slices may
/// run in parallel, the result is deterministic.
std::vector<Vec> lattice_points(const Polytope& P);

/// Lattice points in the strict interior; empty whenever dim P < ambient.
std::vector<Vec> interior_lattice_points(const Polytope& P);

/// Minkowski sum, computed as the hull of pairwise vertex sums.
Polytope minkowski_sum(const Polytope& P, const Polytope& Q);

/// kP for k >= 1.
Polytope dilate(const Polytope& P, Int k);

/// P + t.
Polytope translate(const Polytope& P, const Vec& t);

bool contains(const Polytope& P, const Vec& m);

inline int affine_dim(const Polytope& P) { return P.dim(); }

/// Polar dual of a full-dimensional P with 0 strictly interior. The dual
/// vertex candidates are normal/offset per facet; when one of them is not a
/// lattice point the result carries that rational witness instead.
struct PolarDualResult {
  std::optional<Polytope> dual;      // set iff the dual is a lattice polytope
  std::optional<RatVec> witness;     // lex-least non-integral dual vertex
  bool is_lattice() const { return dual.has_value(); }
};
PolarDualResult polar_dual(const Polytope& P);

enum class NotReflexiveReason {
  none,
  not_full_dimensional,
  origin_not_interior,
  facet_offset_not_one,
};

struct ReflexivityResult {
  bool reflexive = false;
  NotReflexiveReason reason = NotReflexiveReason::none;
  explicit operator bool() const { return reflexive; }
};

/// True iff P is full-dimensional with 0 strictly interior and every facet
/// offset equal to 1. Precondition failures come back as reasons, not errors.
ReflexivityResult is_reflexive(const Polytope& P);

/// Exhaustive lattice-width search: primitive directions m with max-norm
/// <= bound, sign-normalized so the first nonzero coordinate is positive,
/// scanned in lex order; returns the first m whose value spread on P is at
/// most 1, together with base = min <m, P>. Empty optional when none fits.
std::optional<WidthCertificate> width_certificate(const Polytope& P, Int bound);

/// Same, with bound = max |facet normal coordinate|, doubled once on a miss.
std::optional<WidthCertificate> width_certificate(const Polytope& P);

/// dim! * euclidean volume of a full-dimensional P, always an integer.
Int normalized_volume(const Polytope& P);

/// Vertices of each facet of a full-dimensional P in convex cyclic order,
/// parallel to P.facets(). Used by volume, normal fans and triangulations.
std::vector<std::vector<Vec>> facet_cycles(const Polytope& P);

/// Vertices of a 2-dimensional polytope (any ambient) in convex cyclic order.
std::vector<Vec> polygon_cycle(const Polytope& P);

/// Feasible basic solutions of an inequality system: for every dim-subset of
/// halfspaces with independent normals, the exact solution of the tight
/// system, kept when it satisfies all inequalities. These are precisely the
/// vertices of the (possibly rational, possibly empty) solution polytope.
std::vector<RatVec> feasible_basic_solutions(
    const std::vector<HalfSpace>& halfspaces, int dim);

/// Lattice points of { y : <y, n_i> >= -a_i } when that set is bounded.
/// Works directly on the H-representation, so rational vertices are fine.
std::vector<Vec> lattice_points_of_system(
    const std::vector<HalfSpace>& halfspaces, int dim);

}  // namespace latfano
