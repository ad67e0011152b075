// Complete simplicial fans in rank 2 and 3, torus-invariant divisors, and
// the nef / fixed-component / adjoint machinery on them.
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "latfano/normality.hpp"
#include "latfano/polytope.hpp"

namespace latfano {

/// Maximal cone of a simplicial fan: sorted indices into the ray table.
struct Cone {
  std::vector<int> ray_indices;

  friend bool operator==(const Cone&, const Cone&) = default;
  friend auto operator<=>(const Cone&, const Cone&) = default;
};

/// Torus-invariant divisor sum a_i D_i; coefficients parallel to fan rays.
struct TDivisor {
  std::vector<Int> coeffs;

  friend bool operator==(const TDivisor&, const TDivisor&) = default;
};

/// Complete simplicial fan, stored canonically: rays primitive, distinct and
/// lex-sorted; cones as sorted index lists, themselves sorted. Construction
/// validates simpliciality and completeness exactly (wall pairing plus
/// degree and coverage probes in rank 3, exact angular order in rank 2).
/// Instances are immutable; build through make_fan or normal_fan.
class Fan {
 public:
  int dim() const { return dim_; }
  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<Cone>& max_cones() const { return max_cones_; }

  /// Index of a ray value in the canonical table, -1 when absent.
  int ray_index(const Vec& ray) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ &&
           a.max_cones_ == b.max_cones_;
  }

 private:
  Fan() = default;
  friend Fan make_fan(const std::vector<Vec>&,
                      const std::vector<std::vector<int>>&);

  int dim_ = 0;
  std::vector<Vec> rays_;
  std::vector<Cone> max_cones_;
};

/// Validating constructor. Rays may arrive in any order; cones index the
/// input order and are re-indexed to the canonical one.
Fan make_fan(const std::vector<Vec>& rays,
             const std::vector<std::vector<int>>& max_cones);

/// Same, carrying divisor coefficients parallel to the input ray order;
/// they are re-indexed to the canonical ray order of the returned fan.
std::pair<Fan, TDivisor> make_fan(const std::vector<Vec>& rays,
                                  const std::vector<std::vector<int>>& max_cones,
                                  const std::vector<Int>& coeffs);

/// Normal fan of a full-dimensional simple polytope: rays are the primitive
/// facet normals, max cones are dual to vertices, and the returned divisor
/// holds the facet offsets, so polytope_of_divisor inverts this.
std::pair<Fan, TDivisor> normal_fan(const Polytope& P);

/// Every maximal cone unimodular (|det of its rays| = 1).
bool is_smooth(const Fan& F);

/// The all-ones divisor.
TDivisor anticanonical(const Fan& F);

/// polytope_of_divisor found a rational vertex: the divisor is not Cartier
/// enough, dilate it to clear denominators.
struct NonIntegralVertexError : std::runtime_error {
  RatVec witness;
  explicit NonIntegralVertexError(const RatVec& w);
};

/// Section polytope P_D = { y : <y, v_i> >= -a_i for every ray }. nullopt
/// when the system is infeasible (the linear system |D| is empty); throws
/// NonIntegralVertexError when feasible with a non-lattice vertex.
std::optional<Polytope> polytope_of_divisor(const Fan& F, const TDivisor& D);

/// The unique solution u of <u, v_i> = -a_i over sigma's rays; rational
/// coordinates mean D is not Cartier-compatible on sigma.
RatVec cone_support_point(const Fan& F, const TDivisor& D, const Cone& sigma);

/// Nef test on a smooth fan: every support point integral and satisfying all
/// ray inequalities. Throws on non-smooth fans; there the support-point
/// criterion is not the right notion.
bool is_nef(const Fan& F, const TDivisor& D);

/// Fixed multiplicities c_i = min over P_D cap M of (<m, v_i> + a_i), given
/// parallel to the canonical rays. Requires at least one lattice point in
/// P_D; subtracting c from the coefficients leaves the same lattice points
/// and a fixed-component-free divisor.
std::vector<Int> fixed_components(const Fan& F, const TDivisor& D);

/// On a smooth complete 2-fan with no fixed components and nonempty |D|:
/// does the support-point nef test hold?  Precondition failures come back as
/// skipped reports (check name suffixed, holds stays true).
CheckReport verify_surface_bpf(const Fan& F, const TDivisor& D);

/// Hull of the interior lattice points of a full-dimensional P; nullopt when
/// there are none.
std::optional<Polytope> adjoint_polytope(const Polytope& P);

}  // namespace latfano
