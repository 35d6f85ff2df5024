#pragma once

#include "specround/types.hpp"

#include <cstdint>

namespace specround {

/// Classical rounding: Lloyd's k-means on the rows of the n x k leading-
/// eigenvector embedding, k-means++ seeding, best of `restarts` by
/// within-cluster sum of squares (ties keep the earlier restart).
/// k must be supplied; this method cannot estimate it.
Partition kmeans_rounding(const EigenSystem& eigs, int k, int restarts,
                          std::uint64_t seed);

}  // namespace specround
