// End-to-end acceptance gate: ten criteria, one line each, hard time budgets.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "latfano/fixtures.hpp"
#include "latfano/normality.hpp"
#include "latfano/polytope.hpp"
#include "latfano/reference.hpp"
#include "latfano/rng.hpp"
#include "latfano/suites.hpp"
#include "latfano/toric.hpp"

using namespace latfano;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

void line(int idx, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", idx, ok ? "PASS" : "FAIL",
              detail.c_str());
  if (!ok) ++failures;
}

std::string poly_str(const Polytope& P) {
  std::string s = "conv{";
  for (size_t i = 0; i < P.vertices().size(); ++i) {
    if (i) s += ",";
    s += to_string(P.vertices()[i]);
  }
  return s + "}";
}

// criterion 1: the volume-2 empty simplex misses (1,1,1) at level 1
void c1() {
  const auto t0 = Clock::now();
  auto r = check_idp(builtin("REEVE2").polytope);
  const long long ms = ms_since(t0);
  bool ok = !r.holds && r.level && *r.level == 1 &&
            r.gap_points == std::vector<Vec>{Vec{1, 1, 1}} &&
            r.lhs_count == 10 && r.rhs_count == 11 && ms < 10;
  line(1, ok,
       "idp(REEVE2) fails at level 1, gap (1,1,1), counts 10/11, " +
           std::to_string(ms) + " ms (budget 10)");
}

// criterion 2: the doubled simplex recentered at its interior point is
// reflexive, and that interior point is unique
void c2() {
  Polytope d2 = dilate(builtin("REEVE2").polytope, Int(2));
  auto interior = interior_lattice_points(d2);
  Polytope fano = translate(d2, Vec{-1, -1, -1});
  bool ok = interior == std::vector<Vec>{Vec{1, 1, 1}} &&
            is_reflexive(fano).reflexive;
  line(2, ok,
       "2*REEVE2 has unique interior point (1,1,1) and recenters reflexive");
}

// criterion 3: the k=1 Minkowski identity against all five reflexive
// fixtures over 100 seeded random Q in [0,3]^3 with 4..8 points
void c3() {
  const auto t0 = Clock::now();
  auto refl = reflexive_fixtures();
  int held = 0, total = 0;
  std::string first;
  for (int i = 0; i < 100; ++i) {
    SplitMix64 rng(child_seed(7, static_cast<std::uint64_t>(i)));
    int npts = 4 + static_cast<int>(rng.below(5));
    Polytope Q = gen_random_polytope(3, rng.next(), 3, npts);
    for (const auto& f : refl) {
      ++total;
      auto r = check_fano_minkowski(f.polytope, Q);
      if (r.holds) {
        ++held;
      } else if (first.empty()) {
        first = "first: R=" + f.name + ", Q=" + poly_str(Q) + " -> gap " +
                to_string(r.gap_points.front());
      }
    }
  }
  const long long ms = ms_since(t0);
  bool ok = held == total && ms < 60000;
  std::string detail = std::to_string(held) + "/" + std::to_string(total) +
                       " held, " + std::to_string(ms) + " ms (budget 60000)";
  if (!ok && !first.empty()) {
    detail += "; the identity admits genuine counterexamples (verified "
              "independently, see README); " + first;
  }
  line(3, ok, detail);
}

// criterion 4: the k >= 2 identity on 100 random pairs, and its sharpness
// at k = 1 on the dilation chain of REEVE2
void c4() {
  const auto t0 = Clock::now();
  bool all = true;
  for (int i = 0; i < 100; ++i) {
    SplitMix64 rng(child_seed(401, static_cast<std::uint64_t>(i)));
    Polytope R = gen_random_polytope(3, rng.next(), 2, 4 + i % 4);
    Polytope Q = gen_random_polytope(3, rng.next(), 2, 4 + (i + 2) % 4);
    if (!check_pair_identity(R, Q, Int(2)).holds) all = false;
    if (!check_pair_identity(R, Q, Int(3)).holds) all = false;
  }
  Polytope zero = hull({Vec{0, 0, 0}});
  Polytope reeve = builtin("REEVE2").polytope;
  bool sharp = check_pair_identity(zero, reeve, Int(2)).holds &&
               !check_pair_identity(zero, reeve, Int(1)).holds;
  const long long ms = ms_since(t0);
  bool ok = all && sharp && ms < 60000;
  line(4, ok,
       "pair identity holds at k=2,3 on 100 pairs and is sharp at k=1, " +
           std::to_string(ms) + " ms (budget 60000)");
}

// criterion 5: surface multiplication on 200 polygon pairs with degenerate
// segment pairs mixed in
void c5() {
  const auto t0 = Clock::now();
  SuiteResult s = run_suite("surface-mult", 7, 200);
  const long long ms = ms_since(t0);
  bool ok = s.failed == 0 && ms < 10000;
  line(5, ok,
       std::to_string(s.passed) + "/200 surface multiplications held, " +
           std::to_string(ms) + " ms (budget 10000)");
}

// criterion 6: base-point-freeness after removing fixed components on 100
// random smooth complete 2-fans, plus the pinned Hirzebruch instance
void c6() {
  const auto t0 = Clock::now();
  SuiteResult s = run_suite("surface-bpf", 7, 100);

  auto [F, D] = make_fan({Vec{1, 0}, Vec{0, 1}, Vec{-1, 2}, Vec{0, -1}},
                         {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
                         {Int(0), Int(1), Int(0), Int(0)});
  auto fixed = fixed_components(F, D);
  bool hirzebruch = true;
  for (size_t i = 0; i < fixed.size(); ++i) {
    Int expect = F.rays()[i] == Vec{0, 1} ? Int(1) : Int(0);
    if (fixed[i] != expect) hirzebruch = false;
  }
  const long long ms = ms_since(t0);
  bool ok = s.failed == 0 && hirzebruch && ms < 10000;
  line(6, ok,
       std::to_string(s.passed) + "/100 fans base-point-free, F2 fixed part "
       "pinned, " + std::to_string(ms) + " ms (budget 10000)");
}

// criterion 7: decomposition into certified empty simplices on 50 random
// polytopes: emptiness, additive volume, valid width-1 certificates
void c7() {
  const auto t0 = Clock::now();
  int good = 0, missing_cert = 0;
  for (int i = 0; i < 50; ++i) {
    Polytope Q = gen_random_polytope(
        3, child_seed(701, static_cast<std::uint64_t>(i)), 3, 4 + i % 5);
    Decomposition d;
    try {
      d = decompose_empty_simplices(Q);
    } catch (const std::exception&) {
      ++missing_cert;
      continue;
    }
    bool inst = d.pieces.size() == d.certificates.size();
    Int total(0);
    for (size_t p = 0; p < d.pieces.size(); ++p) {
      const Polytope& piece = d.pieces[p];
      if (lattice_points(piece).size() != 4) inst = false;
      total += normalized_volume(piece);
      const WidthCertificate& w = d.certificates[p];
      for (const Vec& v : piece.vertices()) {
        Int t = dot(w.direction, v);
        if (t < w.base || t > w.base + Int(1)) inst = false;
      }
    }
    if (inst && total == normalized_volume(Q)) ++good;
  }
  const long long ms = ms_since(t0);
  bool ok = good == 50 && missing_cert == 0 && ms < 60000;
  line(7, ok,
       std::to_string(good) + "/50 decompositions certified, " +
           std::to_string(missing_cert) + " certificate misses, " +
           std::to_string(ms) + " ms (budget 60000)");
}

// criterion 8: dilations 1..3 of every reflexive fixture have the
// decomposition property
void c8() {
  const auto t0 = Clock::now();
  int good = 0, total = 0;
  for (const auto& f : reflexive_fixtures())
    for (long long k = 1; k <= 3; ++k) {
      ++total;
      if (check_idp(dilate(f.polytope, Int(k))).holds) ++good;
    }
  const long long ms = ms_since(t0);
  bool ok = good == total && ms < 60000;
  line(8, ok,
       std::to_string(good) + "/" + std::to_string(total) +
           " reflexive dilations normal, " + std::to_string(ms) +
           " ms (budget 60000)");
}

// criterion 9: polygons always have the property; the reflexive catalog has
// exactly 16 classes and every one of them passes
void c9() {
  const auto t0 = Clock::now();
  SuiteResult s = run_suite("idp-polygons", 7, 200);
  auto catalog = gen_reflexive_polygons();
  int cat_good = 0;
  for (const auto& P : catalog)
    if (check_idp(P).holds) ++cat_good;
  const long long ms = ms_since(t0);
  bool ok = s.failed == 0 && catalog.size() == 16 && cat_good == 16 &&
            ms < 10000;
  line(9, ok,
       std::to_string(s.passed) + "/200 polygons + " +
           std::to_string(cat_good) + "/" + std::to_string(catalog.size()) +
           " reflexive classes, " + std::to_string(ms) + " ms (budget 10000)");
}

// criterion 10: the optimized kernels agree with the serial oracles
void c10() {
  bool ok = true;
  std::vector<Polytope> targets;
  for (const auto& f : builtin_fixtures()) targets.push_back(f.polytope);
  for (int i = 0; i < 60; ++i)
    targets.push_back(gen_random_polytope(
        3, child_seed(1001, static_cast<std::uint64_t>(i)), 4, 4 + i % 5));
  for (int i = 0; i < 40; ++i)
    targets.push_back(gen_random_polytope(
        2, child_seed(1002, static_cast<std::uint64_t>(i)), 5, 3 + i % 5));
  for (const auto& P : targets)
    if (lattice_points(P) != reference::lattice_points_boxscan(P)) ok = false;

  int pairs_ok = 0;
  for (int i = 0; i < 50; ++i) {
    Polytope P = gen_random_polytope(
        3, child_seed(1003, static_cast<std::uint64_t>(i)), 3, 4 + i % 4);
    Polytope Q = gen_random_polytope(
        3, child_seed(1004, static_cast<std::uint64_t>(i)), 3, 4 + (i + 1) % 4);
    Polytope S = minkowski_sum(P, Q);
    Polytope O = hull(reference::pointwise_sum_serial(lattice_points(P),
                                                      lattice_points(Q)));
    if (S == O) ++pairs_ok;
  }
  ok = ok && pairs_ok == 50;
  line(10, ok,
       std::to_string(targets.size()) + " enumeration targets + " +
           std::to_string(pairs_ok) + "/50 Minkowski pairs match the oracles");
}

}  // namespace

int main() {
  c1();
  c2();
  c3();
  c4();
  c5();
  c6();
  c7();
  c8();
  c9();
  c10();
  if (failures == 0)
    std::printf("acceptance: all 10 criteria hold\n");
  else
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  return failures;
}
