#pragma once

#include "specround/types.hpp"

#include <utility>
#include <vector>

namespace specround {

/// Splits an eigenvector into its positive- and negative-side indicator
/// vectors with confidence delta in (0, 1). The plus side keeps points
/// with e_j > 0 and e_j > delta * max(e); the minus side keeps points
/// with e_j < 0 and e_j < delta * min(e). Both inequalities are strict,
/// so threshold-equal points are excluded. Either side may be all-zero.
/// eigen_index tags the result with the 1-based source index s of e_s.
std::pair<BinaryVector, BinaryVector> binarize(const Vector& vec, double delta, int eigen_index = 0);

/// Binarizes eigenvectors 1..K of the system in order, producing the
/// 2K binary vectors e_1+, e_1-, ..., e_K+, e_K-.
std::vector<BinaryVector> binarize_all(const EigenSystem& eigs, double delta);

/// Two-cell partition of the points by bit value (one cell when the
/// vector is constant), canonically labeled.
Partition partition_of(const BinaryVector& bv);

/// Coarsest common refinement: points share an output cell iff they
/// share a cell in every input. Canonically labeled; empty intersections
/// never appear.
Partition overlay(const std::vector<Partition>& parts);

/// Overlay of exactly two partitions; the incremental step used by the
/// rounding loops.
Partition overlay2(const Partition& a, const Partition& b);

}  // namespace specround
