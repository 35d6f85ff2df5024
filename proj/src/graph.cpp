#include "specround/graph.hpp"

#include "specround/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace specround {

namespace {

Vector row_sums(const Matrix& s) {
    // Stored degrees must equal row sums exactly, so sum in plain row order.
    const auto n = s.rows();
    Vector d(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double acc = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) acc += s(i, j);
        d(i) = acc;
    }
    return d;
}

}  // namespace

SimilarityMatrix knn_similarity(const DataSet& data, int k) {
    const int n = data.n();
    if (k < 1) fail(ErrorCode::invalid_argument, "k-NN requires k >= 1");
    if (k >= n)
        fail(ErrorCode::k_too_large,
             "k-NN requires k < n (k = " + std::to_string(k) + ", n = " + std::to_string(n) + ")");
    if (!data.points.allFinite())
        fail(ErrorCode::nonfinite_input, "k-NN input contains non-finite coordinates");

    Matrix s = Matrix::Zero(n, n);
    std::vector<double> dist(static_cast<std::size_t>(n));
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            dist[static_cast<std::size_t>(j)] = (data.points.row(i) - data.points.row(j)).squaredNorm();
        std::iota(order.begin(), order.end(), 0);
        order.erase(order.begin() + i);  // self is never a neighbor
        std::nth_element(order.begin(), order.begin() + (k - 1), order.end(), [&](int a, int b) {
            const double da = dist[static_cast<std::size_t>(a)];
            const double db = dist[static_cast<std::size_t>(b)];
            return da < db || (da == db && a < b);
        });
        for (int r = 0; r < k; ++r) {
            const int j = order[static_cast<std::size_t>(r)];
            s(i, j) = 1.0;
            s(j, i) = 1.0;
        }
        order.insert(order.begin() + i, i);
    }
    Vector degrees = row_sums(s);
    return SimilarityMatrix{std::move(s), std::move(degrees)};
}

SimilarityMatrix gaussian_similarity(const DataSet& data, double sigma) {
    if (!(sigma > 0.0)) fail(ErrorCode::invalid_argument, "gaussian similarity requires sigma > 0");
    if (!data.points.allFinite())
        fail(ErrorCode::nonfinite_input, "gaussian similarity input contains non-finite coordinates");

    const int n = data.n();
    const double inv_s2 = 1.0 / (sigma * sigma);
    Matrix s(n, n);
    for (int i = 0; i < n; ++i) {
        s(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            const double d2 = (data.points.row(i) - data.points.row(j)).squaredNorm();
            const double v = std::exp(-d2 * inv_s2);
            s(i, j) = v;
            s(j, i) = v;  // assign both halves so the matrix is exactly symmetric
        }
    }
    Vector degrees = row_sums(s);
    return SimilarityMatrix{std::move(s), std::move(degrees)};
}

Laplacian laplacian_rw(const SimilarityMatrix& sim) {
    const int n = sim.n();
    for (int i = 0; i < n; ++i)
        if (!(sim.degrees(i) > 0.0))
            fail(ErrorCode::isolated_vertex, "isolated vertex at point index " + std::to_string(i));

    Matrix l = Matrix::Identity(n, n) - sim.degrees.cwiseInverse().asDiagonal() * sim.s;
    return Laplacian{std::move(l), sim.degrees};
}

Partition connected_components(const SimilarityMatrix& sim) {
    const int n = sim.n();
    std::vector<std::int32_t> label(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    std::int32_t next = 0;
    for (int start = 0; start < n; ++start) {
        if (label[static_cast<std::size_t>(start)] >= 0) continue;
        label[static_cast<std::size_t>(start)] = next;
        stack.push_back(start);
        while (!stack.empty()) {
            const int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (sim.s(i, j) > 0.0 && label[static_cast<std::size_t>(j)] < 0) {
                    label[static_cast<std::size_t>(j)] = next;
                    stack.push_back(j);
                }
            }
        }
        ++next;
    }
    // Scanning from point 0 already yields canonical labels.
    Partition p;
    p.assignment = std::move(label);
    p.k = next;
    return p;
}

}  // namespace specround
