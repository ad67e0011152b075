// Compares the parallel kernels against the serial reference implementations
// on growing instances, checking agreement and printing timings.

#include <chrono>
#include <cstdio>

#include "latfano/fixtures.hpp"
#include "latfano/normality.hpp"
#include "latfano/parallel.hpp"
#include "latfano/reference.hpp"

using namespace latfano;

namespace {

double ms(std::chrono::steady_clock::time_point a,
          std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

}  // namespace

int main() {
  std::printf("threads: %d\n", effective_threads());

  std::printf("\nlattice_points: tightened parallel scan vs naive box scan\n");
  std::printf("%-28s %10s %12s %12s\n", "instance", "points", "scan ms",
              "naive ms");
  const Polytope simplex = builtin("BIGSIMPLEX").polytope;
  for (long long k : {10, 20, 40, 60}) {
    const Polytope P = dilate(simplex, Int(k));
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<Vec> fast = lattice_points(P);
    const auto t1 = std::chrono::steady_clock::now();
    const std::vector<Vec> slow = reference::lattice_points_boxscan(P);
    const auto t2 = std::chrono::steady_clock::now();
    if (fast != slow) {
      std::printf("MISMATCH at dilation %lld\n", k);
      return 1;
    }
    std::printf("%-2lld * BIGSIMPLEX %13s %10zu %12.2f %12.2f\n", k, "",
                fast.size(), ms(t0, t1), ms(t1, t2));
  }

  std::printf("\npointwise_sum: parallel fill vs std::set closure\n");
  std::printf("%-28s %10s %12s %12s\n", "instance", "sums", "parallel ms",
              "set ms");
  const Polytope cube = builtin("CUBE3").polytope;
  for (long long k : {3, 5}) {
    const std::vector<Vec> S = lattice_points(dilate(cube, Int(k)));
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<Vec> fast = pointwise_sum(S, S);
    const auto t1 = std::chrono::steady_clock::now();
    const std::vector<Vec> slow = reference::pointwise_sum_serial(S, S);
    const auto t2 = std::chrono::steady_clock::now();
    if (fast != slow) {
      std::printf("MISMATCH at dilation %lld\n", k);
      return 1;
    }
    std::printf("%-2lld * CUBE3 self-sum %9s %10zu %12.2f %12.2f\n", k, "",
                fast.size(), ms(t0, t1), ms(t1, t2));
  }
  return 0;
}
