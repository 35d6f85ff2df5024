#pragma once

#include "specround/types.hpp"

namespace specround {

/// Symmetric k-NN similarity: s_ij = 1 iff x_i is among the k nearest
/// neighbors of x_j or x_j among the k nearest of x_i, else 0. A point
/// never counts as its own neighbor, so the diagonal is 0. Distance ties
/// break toward the lower point index.
SimilarityMatrix knn_similarity(const DataSet& data, int k);

/// Gaussian similarity s_ij = exp(-||x_i - x_j||^2 / sigma^2). The
/// diagonal keeps the formula's value at distance 0, i.e. s_ii = 1.
SimilarityMatrix gaussian_similarity(const DataSet& data, double sigma);

/// Normalized random-walk Laplacian l = I - D^{-1} S. Every degree must
/// be positive; an isolated vertex is a hard error naming the point.
Laplacian laplacian_rw(const SimilarityMatrix& sim);

/// Connected components of the graph {(i,j) : s_ij > 0}, labeled
/// canonically (component 0 contains point 0, ...).
Partition connected_components(const SimilarityMatrix& sim);

}  // namespace specround
