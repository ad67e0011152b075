// Minkowski-sum / lattice-point identity checks. Every check computes both
// sides exactly, asserts the inclusion direction that is a theorem, and
// reports the difference set of the other direction.

#include <algorithm>
#include <chrono>
#include <exception>
#include <stdexcept>

#include "latfano/normality.hpp"
#include "latfano/parallel.hpp"

namespace latfano {
namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

// rhs \ lhs for sorted lists; throws when lhs is not contained in rhs, since
// every identity checked here has the inclusion as a theorem and a violation
// means the implementation is broken, not the input.
std::vector<Vec> gap_points(const std::vector<Vec>& lhs,
                            const std::vector<Vec>& rhs) {
  std::vector<Vec> gap;
  size_t i = 0, j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i] < rhs[j]))
      throw std::logic_error("identity check: LHS not contained in RHS");
    if (i < lhs.size() && lhs[i] == rhs[j]) {
      ++i;
      ++j;
    } else {
      gap.push_back(rhs[j]);
      ++j;
    }
  }
  return gap;
}

void finish(CheckReport& r, std::vector<Vec> gap, size_t lhs, size_t rhs,
            Clock::time_point t0) {
  r.gap_points = std::move(gap);
  r.holds = r.gap_points.empty();
  r.lhs_count = static_cast<long long>(lhs);
  r.rhs_count = static_cast<long long>(rhs);
  r.elapsed_ms = ms_since(t0);
}

}  // namespace

namespace {

// Marking table for the dense path: at most this many cells get allocated.
constexpr unsigned long long kDenseCells = 1ull << 26;

// Distinct sums read off a byte table over the sum bounding box. Costs
// O(pairs + cells) instead of sorting all pairs, so it is used whenever the
// box is small relative to the pair count.
std::vector<Vec> sum_by_marking(const std::vector<Vec>& S,
                                const std::vector<Vec>& T, const Vec& lo,
                                const long long (&span)[3],
                                unsigned long long cells, int eff) {
  const int d = S[0].dim();
  const long long ns = static_cast<long long>(S.size());
  const long long nt = static_cast<long long>(T.size());
  std::vector<unsigned char> mark(static_cast<size_t>(cells), 0);
  std::exception_ptr err = nullptr;
  (void)eff;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(eff) if (eff > 1)
#endif
  for (long long i = 0; i < ns; ++i) {
    try {
      for (long long j = 0; j < nt; ++j) {
        const Vec v =
            S[static_cast<size_t>(i)] + T[static_cast<size_t>(j)];
        unsigned long long idx = 0;
        for (int k = 0; k < d; ++k)
          idx = idx * static_cast<unsigned long long>(span[k]) +
                static_cast<unsigned long long>((v[k] - lo[k]).value());
#ifdef _OPENMP
#pragma omp atomic write
#endif
        mark[static_cast<size_t>(idx)] = 1;
      }
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(latfano_psum_err)
#endif
      {
        if (!err) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);

  std::vector<Vec> out;
  Vec v = lo;
  unsigned long long idx = 0;
  for (long long a = 0; a < span[0]; ++a) {
    v[0] = lo[0] + Int(a);
    for (long long b = 0; b < span[1]; ++b) {
      v[1] = lo[1] + Int(b);
      if (d == 2) {
        if (mark[static_cast<size_t>(idx++)]) out.push_back(v);
        continue;
      }
      for (long long c = 0; c < span[2]; ++c) {
        if (mark[static_cast<size_t>(idx++)]) {
          v[2] = lo[2] + Int(c);
          out.push_back(v);
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Vec> pointwise_sum(const std::vector<Vec>& S,
                               const std::vector<Vec>& T) {
  if (S.empty() || T.empty()) return {};
  if (S[0].dim() != T[0].dim())
    throw std::invalid_argument("pointwise_sum: dimension mismatch");
  const int d = S[0].dim();
  const long long ns = static_cast<long long>(S.size());
  const long long nt = static_cast<long long>(T.size());
  const int eff = effective_threads();

  // probe the sum bounding box; a failed span addition means some actual
  // pair sum would overflow anyway, so letting it throw here is consistent
  Vec lo = Vec::zero(d);
  long long span[3] = {1, 1, 1};
  unsigned long long cells = 1;
  bool dense = true;
  for (int k = 0; k < d && dense; ++k) {
    Int smin = S[0][k], smax = smin, tmin = T[0][k], tmax = tmin;
    for (const Vec& s : S) {
      if (s[k] < smin) smin = s[k];
      if (s[k] > smax) smax = s[k];
    }
    for (const Vec& t : T) {
      if (t[k] < tmin) tmin = t[k];
      if (t[k] > tmax) tmax = t[k];
    }
    lo[k] = smin + tmin;
    const Int hi = smax + tmax;
    // width in unsigned arithmetic: hi - lo can exceed LLONG_MAX even when
    // every individual pair sum fits
    const unsigned long long width =
        static_cast<unsigned long long>(hi.value()) -
        static_cast<unsigned long long>(lo[k].value());
    if (width >= kDenseCells / cells) {
      dense = false;
    } else {
      span[k] = static_cast<long long>(width) + 1;
      cells *= width + 1;
    }
  }
  const unsigned long long pairs =
      static_cast<unsigned long long>(ns) * static_cast<unsigned long long>(nt);
  if (dense && cells <= 4 * pairs)
    return sum_by_marking(S, T, lo, span, cells, eff);

  // sparse fallback: materialize every pair and sort
  std::vector<Vec> sums(static_cast<size_t>(ns * nt));
  std::exception_ptr err = nullptr;
  (void)eff;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(eff) if (eff > 1)
#endif
  for (long long i = 0; i < ns; ++i) {
    try {
      for (long long j = 0; j < nt; ++j)
        sums[static_cast<size_t>(i * nt + j)] =
            S[static_cast<size_t>(i)] + T[static_cast<size_t>(j)];
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(latfano_psum_err)
#endif
      {
        if (!err) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

CheckReport check_sum_equality(const Polytope& P, const Polytope& Q) {
  if (P.ambient_dim() != Q.ambient_dim())
    throw std::invalid_argument("check_sum_equality: dimension mismatch");
  const auto t0 = Clock::now();
  CheckReport r;
  r.check = "sum-equality";
  std::vector<Vec> lhs = pointwise_sum(lattice_points(P), lattice_points(Q));
  std::vector<Vec> rhs = lattice_points(minkowski_sum(P, Q));
  finish(r, gap_points(lhs, rhs), lhs.size(), rhs.size(), t0);
  return r;
}

CheckReport check_idp(const Polytope& P) {
  const int n = P.ambient_dim();
  if (P.dim() != n)
    throw std::invalid_argument("check_idp: polytope not full-dimensional");
  const auto t0 = Clock::now();
  CheckReport r;
  r.check = "idp";
  const std::vector<Vec> base = lattice_points(P);
  for (long long k = 1; k <= n - 1; ++k) {
    std::vector<Vec> lhs = pointwise_sum(
        base, k == 1 ? base : lattice_points(dilate(P, Int(k))));
    std::vector<Vec> rhs = lattice_points(dilate(P, Int(k + 1)));
    std::vector<Vec> gap = gap_points(lhs, rhs);
    r.level = k;
    finish(r, std::move(gap), lhs.size(), rhs.size(), t0);
    if (!r.holds) break;  // first failing level wins the report
  }
  return r;
}

CheckReport check_pair_identity(const Polytope& R, const Polytope& Q, Int k) {
  if (R.ambient_dim() != Q.ambient_dim())
    throw std::invalid_argument("check_pair_identity: dimension mismatch");
  if (k < Int(1))
    throw std::invalid_argument("check_pair_identity: k must be >= 1");
  const auto t0 = Clock::now();
  CheckReport r;
  r.check = "pair-identity";
  r.level = k.value();
  Polytope RkQ = minkowski_sum(R, dilate(Q, k));
  Polytope Rk1Q = minkowski_sum(R, dilate(Q, k + Int(1)));
  std::vector<Vec> lhs =
      pointwise_sum(lattice_points(RkQ), lattice_points(Q));
  std::vector<Vec> rhs = lattice_points(Rk1Q);
  finish(r, gap_points(lhs, rhs), lhs.size(), rhs.size(), t0);
  return r;
}

CheckReport check_fano_minkowski(const Polytope& R, const Polytope& Q) {
  if (!is_reflexive(R))
    throw std::invalid_argument("check_fano_minkowski: R is not reflexive");
  if (Q.ambient_dim() != 3 || Q.dim() != 3)
    throw std::invalid_argument(
        "check_fano_minkowski: Q must be a full-dimensional 3-polytope");
  CheckReport r = check_pair_identity(R, Q, Int(1));
  r.check = "fano-minkowski";
  return r;
}

CheckReport check_surface_multiplication(const Polytope& A,
                                         const Polytope& B) {
  if (A.ambient_dim() != 2 || B.ambient_dim() != 2)
    throw std::invalid_argument(
        "check_surface_multiplication: ambient dimension must be 2");
  const auto t0 = Clock::now();
  CheckReport r;
  r.check = "surface-multiplication";
  Polytope AB = minkowski_sum(A, B);
  Polytope AAB = minkowski_sum(dilate(A, Int(2)), B);
  std::vector<Vec> lhs =
      pointwise_sum(lattice_points(A), lattice_points(AB));
  std::vector<Vec> rhs = lattice_points(AAB);
  finish(r, gap_points(lhs, rhs), lhs.size(), rhs.size(), t0);
  return r;
}

}  // namespace latfano
