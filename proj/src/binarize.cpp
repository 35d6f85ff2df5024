#include "specround/binarize.hpp"

#include "specround/error.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>

namespace specround {

std::pair<BinaryVector, BinaryVector> binarize(const Vector& vec, double delta, int eigen_index) {
    if (!(delta > 0.0 && delta < 1.0))
        fail(ErrorCode::invalid_argument, "binarization confidence delta must lie in (0, 1)");
    if (vec.size() == 0) fail(ErrorCode::empty_data, "cannot binarize an empty vector");

    const int n = static_cast<int>(vec.size());
    const double vmax = vec.maxCoeff();
    const double vmin = vec.minCoeff();
    const double plus_threshold = delta * vmax;
    const double minus_threshold = delta * vmin;

    BinaryVector plus;
    plus.bits.assign(static_cast<std::size_t>(n), 0);
    plus.eigen_index = eigen_index;
    plus.side = BinaryVector::Side::plus;
    BinaryVector minus = plus;
    minus.side = BinaryVector::Side::minus;

    for (int j = 0; j < n; ++j) {
        const double v = vec(j);
        if (v > 0.0 && v > plus_threshold) {
            plus.bits[static_cast<std::size_t>(j)] = 1;
            ++plus.support_size;
        } else if (v < 0.0 && v < minus_threshold) {
            minus.bits[static_cast<std::size_t>(j)] = 1;
            ++minus.support_size;
        }
    }
    return {std::move(plus), std::move(minus)};
}

std::vector<BinaryVector> binarize_all(const EigenSystem& eigs, double delta) {
    std::vector<BinaryVector> out;
    out.reserve(static_cast<std::size_t>(2 * eigs.K()));
    for (int j = 0; j < eigs.K(); ++j) {
        auto [plus, minus] = binarize(eigs.eigenvectors.col(j), delta, j + 1);
        out.push_back(std::move(plus));
        out.push_back(std::move(minus));
    }
    return out;
}

Partition partition_of(const BinaryVector& bv) {
    std::vector<std::int32_t> labels(bv.bits.begin(), bv.bits.end());
    return Partition::from_labels(labels);
}

Partition overlay2(const Partition& a, const Partition& b) {
    if (a.n() != b.n())
        fail(ErrorCode::length_mismatch,
             "overlay of partitions over " + std::to_string(a.n()) + " and " + std::to_string(b.n()) + " points");
    const int n = a.n();
    std::vector<std::int32_t> labels(static_cast<std::size_t>(n));
    std::unordered_map<std::int64_t, std::int32_t> seen;
    for (int i = 0; i < n; ++i) {
        const std::int64_t key =
            static_cast<std::int64_t>(a.assignment[static_cast<std::size_t>(i)]) * (b.k + 1) +
            b.assignment[static_cast<std::size_t>(i)];
        auto [it, inserted] = seen.try_emplace(key, static_cast<std::int32_t>(seen.size()));
        labels[static_cast<std::size_t>(i)] = it->second;
    }
    Partition p;
    p.assignment = std::move(labels);
    p.k = static_cast<std::int32_t>(seen.size());
    return p;
}

Partition overlay(const std::vector<Partition>& parts) {
    if (parts.empty()) fail(ErrorCode::invalid_argument, "overlay requires at least one partition");
    Partition acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = overlay2(acc, parts[i]);
    return acc;
}

}  // namespace specround
