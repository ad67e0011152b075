#include <chrono>
#include <exception>
#include <functional>
#include <stdexcept>

#include "latfano/fixtures.hpp"
#include "latfano/parallel.hpp"
#include "latfano/rng.hpp"
#include "latfano/suites.hpp"

namespace latfano {
namespace {

using Clock = std::chrono::steady_clock;

CheckReport idp_polygons_item(std::uint64_t child) {
  SplitMix64 rng(child);
  const int npts = 3 + static_cast<int>(rng.below(6));
  Polytope P = gen_random_polytope(2, rng.next(), 3, npts);
  return check_idp(P);
}

CheckReport fano_minkowski_item(const std::vector<Fixture>& refl, int i,
                                std::uint64_t child) {
  const Polytope& R = refl[static_cast<size_t>(i) % refl.size()].polytope;
  SplitMix64 rng(child);
  const int npts = 4 + static_cast<int>(rng.below(5));
  Polytope Q = gen_random_polytope(3, rng.next(), 3, npts);
  return check_fano_minkowski(R, Q);
}

CheckReport pair_identity_item(std::uint64_t child) {
  SplitMix64 rng(child);
  Polytope R =
      gen_random_polytope(3, rng.next(), 2, 4 + static_cast<int>(rng.below(4)));
  Polytope Q =
      gen_random_polytope(3, rng.next(), 2, 4 + static_cast<int>(rng.below(4)));
  return check_pair_identity(R, Q, Int(2));
}

CheckReport surface_mult_item(int i, std::uint64_t child) {
  if (i % 10 == 9) {
    auto [A, B] = parallel_segment_pair(child);
    return check_surface_multiplication(A, B);
  }
  SplitMix64 rng(child);
  Polytope A =
      gen_random_polytope(2, rng.next(), 4, 3 + static_cast<int>(rng.below(5)));
  Polytope B =
      gen_random_polytope(2, rng.next(), 4, 3 + static_cast<int>(rng.below(5)));
  return check_surface_multiplication(A, B);
}

CheckReport surface_bpf_item(std::uint64_t child) {
  SplitMix64 rng(child);
  Fan F = random_smooth_fan2(rng.next(), static_cast<int>(rng.below(7)));
  for (int attempt = 0; attempt < 32; ++attempt) {
    TDivisor D;
    for (size_t k = 0; k < F.rays().size(); ++k)
      D.coeffs.push_back(Int(static_cast<long long>(rng.below(6)) - 2));
    std::vector<Int> cs;
    try {
      cs = fixed_components(F, D);
    } catch (const std::invalid_argument&) {
      continue;  // empty linear system, draw again
    }
    for (size_t k = 0; k < cs.size(); ++k) D.coeffs[k] -= cs[k];
    return verify_surface_bpf(F, D);
  }
  // all draws were empty; fall back to -K, whose system contains the origin
  TDivisor D = anticanonical(F);
  std::vector<Int> cs = fixed_components(F, D);
  for (size_t k = 0; k < cs.size(); ++k) D.coeffs[k] -= cs[k];
  return verify_surface_bpf(F, D);
}

CheckReport decompose_width_item(std::uint64_t child) {
  const auto t0 = Clock::now();
  SplitMix64 rng(child);
  const long long box = 2 + static_cast<long long>(rng.below(2));
  const int npts = 4 + static_cast<int>(rng.below(5));
  Polytope Q = gen_random_polytope(3, rng.next(), box, npts);
  Decomposition dec = decompose_empty_simplices(Q);
  CheckReport r;
  r.check = "decompose-width";
  r.holds = true;
  r.lhs_count = static_cast<long long>(dec.pieces.size());
  r.rhs_count = normalized_volume(Q).value();
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     Clock::now() - t0)
                     .count();
  return r;
}

}  // namespace

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int n) {
  if (n < 0) throw std::invalid_argument("run_suite: negative item count");

  std::function<CheckReport(int, std::uint64_t)> body;
  std::vector<Fixture> refl;
  if (name == "idp-polygons") {
    body = [](int, std::uint64_t c) { return idp_polygons_item(c); };
  } else if (name == "fano-minkowski") {
    refl = reflexive_fixtures();
    body = [&refl](int i, std::uint64_t c) {
      return fano_minkowski_item(refl, i, c);
    };
  } else if (name == "pair-identity-k2") {
    body = [](int, std::uint64_t c) { return pair_identity_item(c); };
  } else if (name == "surface-mult") {
    body = [](int i, std::uint64_t c) { return surface_mult_item(i, c); };
  } else if (name == "surface-bpf") {
    body = [](int, std::uint64_t c) { return surface_bpf_item(c); };
  } else if (name == "decompose-width") {
    body = [](int, std::uint64_t c) { return decompose_width_item(c); };
  } else {
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
  }

  SuiteResult out;
  out.suite = name;
  out.seed = seed;
  out.items.resize(static_cast<size_t>(n));

  auto run_item = [&](int i) {
    const std::uint64_t child =
        child_seed(seed, static_cast<std::uint64_t>(i));
    try {
      return body(i, child);
    } catch (const std::exception&) {
      CheckReport r;
      r.check = name + ":error";
      r.holds = false;
      return r;
    }
  };

  const int eff = effective_threads();
  std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(eff) if (eff > 1)
#endif
  for (int i = 0; i < n; ++i) {
    try {
      out.items[static_cast<size_t>(i)] = run_item(i);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(latfano_suite_err)
#endif
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);

  for (const CheckReport& r : out.items) {
    if (r.holds)
      ++out.passed;
    else
      ++out.failed;
  }
  return out;
}

}  // namespace latfano
