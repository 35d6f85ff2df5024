#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

namespace specround {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// A set of n points in R^d, optionally carrying true cluster labels.
/// Labels are remapped on construction to the contiguous range 0..k_t-1
/// in order of first occurrence.
struct DataSet {
    Matrix points;               // n x d
    std::vector<std::int32_t> labels;  // empty when absent

    int n() const { return static_cast<int>(points.rows()); }
    int d() const { return static_cast<int>(points.cols()); }
    bool has_labels() const { return !labels.empty(); }
    int label_count() const;

    /// Validates invariants (n >= 2, finite coordinates, label shape)
    /// and canonicalizes labels. Throws Error on violation.
    static DataSet create(Matrix points, std::vector<std::int32_t> labels = {});
};

/// Symmetric nonnegative pairwise-similarity matrix with its degree vector.
struct SimilarityMatrix {
    Matrix s;        // n x n
    Vector degrees;  // degrees[i] == s.row(i).sum() exactly as stored

    int n() const { return static_cast<int>(s.rows()); }
};

/// Normalized random-walk Laplacian l = I - D^{-1} S. Keeps the source
/// degree vector, which is all the eigensolver needs to recover the
/// symmetric form.
struct Laplacian {
    Matrix l;
    Vector degrees;

    int n() const { return static_cast<int>(l.rows()); }
};

/// The K leading (smallest-eigenvalue) eigenpairs of a Laplacian,
/// ascending, sign-normalized so each column's largest-magnitude entry
/// is positive.
struct EigenSystem {
    Vector eigenvalues;   // length K, ascending
    Matrix eigenvectors;  // n x K, column j pairs with eigenvalues[j]

    int K() const { return static_cast<int>(eigenvalues.size()); }
    int n() const { return static_cast<int>(eigenvectors.rows()); }
};

/// Assignment of each point to a cluster label 0..k-1. Labels are
/// canonical: cluster 0 holds point 0, cluster 1 the lowest-index point
/// outside cluster 0, and so on. Canonical labeling makes partition
/// equality a plain vector comparison.
struct Partition {
    std::vector<std::int32_t> assignment;
    std::int32_t k = 0;

    int n() const { return static_cast<int>(assignment.size()); }

    /// Builds a canonical partition from arbitrary labels.
    static Partition from_labels(std::span<const std::int32_t> labels);

    /// Single-cell partition over n points.
    static Partition single_cell(int n);

    std::vector<std::vector<int>> cells() const;
    std::vector<int> cell_sizes() const;

    bool operator==(const Partition& other) const = default;
};

/// One side of a binarized eigenvector: an indicator over the points.
/// May be all-zero ("degenerated"), which is valid.
struct BinaryVector {
    enum class Side { plus, minus };

    std::vector<std::uint8_t> bits;
    int eigen_index = 0;  // 1-based index s of the source eigenvector e_s
    Side side = Side::plus;
    int support_size = 0;

    int n() const { return static_cast<int>(bits.size()); }

    /// Indices of the points where bits == 1.
    std::vector<int> support() const;
};

}  // namespace specround
