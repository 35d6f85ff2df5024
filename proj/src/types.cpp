#include "specround/types.hpp"

#include "specround/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace specround {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return "InvalidArgument";
        case ErrorCode::k_too_large: return "KTooLarge";
        case ErrorCode::nonfinite_input: return "NonFiniteInput";
        case ErrorCode::isolated_vertex: return "IsolatedVertex";
        case ErrorCode::q_out_of_range: return "QOutOfRange";
        case ErrorCode::k_out_of_range: return "KOutOfRange";
        case ErrorCode::length_mismatch: return "LengthMismatch";
        case ErrorCode::empty_data: return "EmptyData";
        case ErrorCode::single_cluster: return "SingleCluster";
        case ErrorCode::nonfinite_likelihood: return "NonFiniteLikelihood";
        case ErrorCode::solver_failure: return "SolverFailure";
        case ErrorCode::io_error: return "IoError";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::internal_error: return "InternalError";
    }
    return "Unknown";
}

int DataSet::label_count() const {
    if (labels.empty()) return 0;
    return 1 + *std::max_element(labels.begin(), labels.end());
}

DataSet DataSet::create(Matrix points, std::vector<std::int32_t> labels) {
    const auto n = points.rows();
    if (n < 2) fail(ErrorCode::invalid_argument, "DataSet requires n >= 2, got n = " + std::to_string(n));
    if (points.cols() < 1) fail(ErrorCode::invalid_argument, "DataSet requires d >= 1");
    if (!points.allFinite())
        fail(ErrorCode::nonfinite_input, "DataSet contains non-finite coordinates");
    if (!labels.empty()) {
        if (static_cast<Eigen::Index>(labels.size()) != n)
            fail(ErrorCode::length_mismatch, "label column length does not match point count");
        // Remap to contiguous 0..k_t-1 in first-occurrence order.
        std::unordered_map<std::int32_t, std::int32_t> remap;
        for (auto& lab : labels) {
            auto [it, inserted] = remap.try_emplace(lab, static_cast<std::int32_t>(remap.size()));
            lab = it->second;
        }
    }
    return DataSet{std::move(points), std::move(labels)};
}

Partition Partition::from_labels(std::span<const std::int32_t> labels) {
    Partition p;
    p.assignment.resize(labels.size());
    std::unordered_map<std::int32_t, std::int32_t> remap;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = remap.try_emplace(labels[i], static_cast<std::int32_t>(remap.size()));
        p.assignment[i] = it->second;
    }
    p.k = static_cast<std::int32_t>(remap.size());
    return p;
}

Partition Partition::single_cell(int n) {
    Partition p;
    p.assignment.assign(static_cast<std::size_t>(n), 0);
    p.k = n > 0 ? 1 : 0;
    return p;
}

std::vector<std::vector<int>> Partition::cells() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(k));
    for (int i = 0; i < n(); ++i) out[static_cast<std::size_t>(assignment[static_cast<std::size_t>(i)])].push_back(i);
    return out;
}

std::vector<int> Partition::cell_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (auto lab : assignment) ++sizes[static_cast<std::size_t>(lab)];
    return sizes;
}

std::vector<int> BinaryVector::support() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(support_size));
    for (int i = 0; i < n(); ++i)
        if (bits[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

}  // namespace specround
