#include "specround/naive.hpp"

#include "specround/binarize.hpp"
#include "specround/error.hpp"

#include <string>
#include <vector>

namespace specround {

namespace {

/// Support of bv lies inside a single cell of p. All-zero supports pass.
bool support_contained(const BinaryVector& bv, const Partition& p) {
    std::int32_t cell = -1;
    for (int i = 0; i < bv.n(); ++i) {
        if (!bv.bits[static_cast<std::size_t>(i)]) continue;
        std::int32_t c = p.assignment[static_cast<std::size_t>(i)];
        if (cell == -1)
            cell = c;
        else if (c != cell)
            return false;
    }
    return true;
}

Partition overlay_pair_onto(Partition base, const Vector& vec, double delta) {
    auto [plus, minus] = binarize(vec, delta);
    base = overlay2(base, partition_of(plus));
    base = overlay2(base, partition_of(minus));
    return base;
}

}  // namespace

Partition naive_rounding1(const EigenSystem& eigs, int q, double delta) {
    if (q < 2 || q > eigs.K())
        fail(ErrorCode::q_out_of_range,
             "q must be in [2, " + std::to_string(eigs.K()) + "], got " + std::to_string(q));
    Partition p = Partition::single_cell(eigs.n());
    for (int j = 0; j < q; ++j)
        p = overlay_pair_onto(std::move(p), eigs.eigenvectors.col(j), delta);
    return p;
}

bool ctest(const Partition& p, int q, int K, const EigenSystem& eigs, double delta) {
    if (q < 0 || q >= K || K > eigs.K())
        fail(ErrorCode::invalid_argument, "ctest needs 0 <= q < K <= eigs.K");
    if (p.n() != eigs.n())
        fail(ErrorCode::length_mismatch, "partition size does not match eigensystem");
    for (int j = q; j < K; ++j) {
        auto [plus, minus] = binarize(eigs.eigenvectors.col(j), delta, j + 1);
        if (!support_contained(plus, p) || !support_contained(minus, p)) return false;
    }
    return true;
}

NaiveResult naive_rounding2(const EigenSystem& eigs, int K, double delta) {
    if (K > eigs.K())
        fail(ErrorCode::k_too_large, "K exceeds the computed eigensystem");
    const int q_max = K / 2;
    if (q_max < 2)
        fail(ErrorCode::invalid_argument, "need floor(K/2) >= 2, got K = " + std::to_string(K));

    NaiveResult out;
    // Incremental overlay: extending the q-partition by the (q+1)-th
    // binarized pair equals recomputing from scratch (overlay is
    // associative), so each loop step costs one pair.
    Partition p = naive_rounding1(eigs, 2, delta);
    for (int q = 2; q <= q_max; ++q) {
        Partition next = overlay_pair_onto(p, eigs.eigenvectors.col(q), delta);
        bool pass_q = ctest(p, q, K, eigs, delta);
        bool pass_next = ctest(next, q + 1, K, eigs, delta);
        out.ctest_trace.emplace_back(pass_q, pass_next);
        if (pass_q && !pass_next) {
            out.partition = std::move(p);
            out.q_used = q;
            out.triggered = true;
            return out;
        }
        if (q < q_max) p = std::move(next);
    }
    out.partition = std::move(p);
    out.q_used = q_max;
    out.triggered = false;
    return out;
}

}  // namespace specround
