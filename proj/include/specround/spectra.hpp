#pragma once

#include "specround/types.hpp"

namespace specround {

/// K smallest-eigenvalue eigenpairs of L_rw, ascending. L_rw itself is
/// not symmetric, so the solve runs on the equivalent symmetric matrix
/// D^{-1/2} (D - S) D^{-1/2} and maps eigenvectors back through
/// u = D^{-1/2} v; the returned columns are D-orthonormal. Each column
/// is sign-normalized: its largest-magnitude entry is positive, ties
/// resolved by the lowest index. Repeated runs are bit-identical.
EigenSystem leading_eigenpairs(const Laplacian& lap, int K);

/// True iff within every cell of the partition the vector's max - min
/// spread is at most tol.
bool is_piecewise_constant(const Vector& vec, const Partition& partition, double tol);

}  // namespace specround
