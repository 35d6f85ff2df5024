#pragma once

#include "specround/types.hpp"

namespace specround {

struct MetricReport {
    double rand_index = 0.0;
    double vi = 0.0;  // nats
    int k_found = 0;
    int k_true = 0;
};

/// Fraction of point pairs on which the two partitions agree (both
/// together or both apart). Symmetric; 1.0 iff equal up to relabeling.
double rand_index(const Partition& p, const Partition& t);

/// Variation of information H(p) + H(t) - 2 I(p, t) in nats, computed
/// from the joint cell-count contingency table.
double variation_of_information(const Partition& p, const Partition& t);

MetricReport evaluate_partition(const Partition& predicted, const Partition& truth);

}  // namespace specround
