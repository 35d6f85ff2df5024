#pragma once

#include "specround/types.hpp"

#include <utility>
#include <vector>

namespace specround {

/// Outcome of the self-terminating naive search: the chosen partition,
/// the q it came from, and per-q containment-test results as
/// (pass at q, pass at q+1) pairs starting at q = 2. `triggered` is
/// false when no pass-then-fail transition occurred and the last
/// partition was returned as a fallback.
struct NaiveResult {
    Partition partition;
    int q_used = 0;
    std::vector<std::pair<bool, bool>> ctest_trace;
    bool triggered = false;
};

/// Binarizes eigenvectors 1..q and overlays all 2q induced partitions.
/// The cluster count is whatever the overlay produces.
Partition naive_rounding1(const EigenSystem& eigs, int q, double delta);

/// Containment test: true iff the support of every binary vector from
/// eigenvectors q+1..K lies inside a single cell of p (all-zero vectors
/// pass vacuously).
bool ctest(const Partition& p, int q, int K, const EigenSystem& eigs, double delta);

/// Searches q = 2..floor(K/2) for the first q where the containment
/// test passes at q and fails at q+1; falls back to the last partition
/// when no such q exists.
NaiveResult naive_rounding2(const EigenSystem& eigs, int K, double delta);

}  // namespace specround
