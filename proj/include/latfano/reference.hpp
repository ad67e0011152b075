// Serial reference implementations: independent oracles the tests hold the
// optimized kernels against.
#pragma once

#include <vector>

#include "latfano/polytope.hpp"

namespace latfano::reference {

/// Naive full bounding-box scan with a per-point membership test. No interval
/// tightening, no parallelism; the oracle for lattice_points().
std::vector<Vec> lattice_points_boxscan(const Polytope& P);

/// { s + t } collected through a std::set, single-threaded; the oracle for
/// pointwise_sum().
std::vector<Vec> pointwise_sum_serial(const std::vector<Vec>& S,
                                      const std::vector<Vec>& T);

}  // namespace latfano::reference
