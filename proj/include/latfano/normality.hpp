// Lattice-point identity checks on Minkowski sums and dilations, plus the
// empty-simplex decomposition with width certificates.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latfano/polytope.hpp"

namespace latfano {

/// Outcome of one verification check. holds is equivalent to gap_points
/// being empty; gap_points list the right-hand-side points missing from the
/// left-hand side (the inclusion LHS within RHS is asserted, never assumed).
struct CheckReport {
  std::string check;
  bool holds = false;
  std::optional<long long> level;  // the dilation level k, when the check has one
  std::vector<Vec> gap_points;
  long long lhs_count = 0;
  long long rhs_count = 0;
  long long elapsed_ms = 0;
};

/// { s + t : s in S, t in T } deduplicated and sorted. S, T are lattice-point
/// lists of equal dimension. Slices of S are summed in parallel and merged
/// deterministically.
std::vector<Vec> pointwise_sum(const std::vector<Vec>& S,
                               const std::vector<Vec>& T);

/// Does (P cap M) + (Q cap M) = (P + Q) cap M hold pointwise?
CheckReport check_sum_equality(const Polytope& P, const Polytope& Q);

/// Integer decomposition property of a full-dimensional P in dimension n:
/// P cap M + kP cap M = (k+1)P cap M for every k = 1..n-1 (higher k follow).
/// Reports the first failing level.
CheckReport check_idp(const Polytope& P);

/// (R + kQ) cap M + Q cap M = (R + (k+1)Q) cap M for one k >= 1.
CheckReport check_pair_identity(const Polytope& R, const Polytope& Q, Int k);

/// The k = 1 pair identity with its hypotheses enforced: R reflexive and Q a
/// full-dimensional 3-polytope. The identity holds on most inputs but not
/// all: the smallest known failure is R = [-1,1]^3 against the empty simplex
/// conv{0, (1,2,0), (1,3,-1), (2,1,1)}, where (3,2,-1) has no decomposition.
/// A nonempty gap is therefore a real finding, reported exactly.
CheckReport check_fano_minkowski(const Polytope& R, const Polytope& Q);

/// Surface multiplication identity for lattice polygons A, B (dimensions
/// below 2 allowed): A cap M + (A+B) cap M = (2A+B) cap M.
CheckReport check_surface_multiplication(const Polytope& A, const Polytope& B);

/// Triangulation of a 3-polytope into empty simplices, each carrying a
/// verified lattice-width-1 certificate.
struct Decomposition {
  std::vector<Polytope> pieces;
  std::vector<WidthCertificate> certificates;  // parallel to pieces
};

/// Placing triangulation of Q on the full set lattice_points(Q), inserted in
/// lex order. Every cell is verified empty (its lattice points are exactly
/// its four vertices), volumes are verified additive, and each cell gets a
/// width certificate through the default bound policy. Q must be a
/// full-dimensional 3-polytope.
Decomposition decompose_empty_simplices(const Polytope& Q);

}  // namespace latfano
