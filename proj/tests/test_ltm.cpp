#include "specround/binarize.hpp"
#include "specround/error.hpp"
#include "specround/lcm.hpp"
#include "specround/ltm.hpp"
#include "specround/naive.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

using namespace specround;
using testutil::part;

namespace {

BinaryVector indicator(int n, std::initializer_list<int> ones) {
    BinaryVector bv;
    bv.bits.assign(static_cast<std::size_t>(n), 0);
    for (int i : ones) bv.bits[static_cast<std::size_t>(i)] = 1;
    bv.support_size = static_cast<int>(ones.size());
    return bv;
}

/// Primary features that indicate the cells of a two-cell split at the
/// given boundary, plus the matching partition and aligned model.
struct TwoCell {
    FeatureData primary;
    Partition partition;
    LCModel model;
};

TwoCell two_cell_case(int n, int first_cell) {
    TwoCell out;
    out.primary.rows = Matrix::Zero(n, 2);
    std::vector<std::int32_t> labels(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < first_cell; ++i) {
        out.primary.rows(i, 0) = 1.0;
        labels[static_cast<std::size_t>(i)] = 0;
    }
    for (int i = first_cell; i < n; ++i) out.primary.rows(i, 1) = 1.0;
    out.partition = Partition::from_labels(labels);
    out.model = model_from_partition(out.primary, out.partition);
    return out;
}

FeatureData secondary_data(const std::vector<BinaryVector>& vecs) {
    return FeatureData::from_binary(vecs);
}

FeatureData no_secondary(int) {
    FeatureData fd;
    fd.rows = Matrix(0, 0);
    return fd;
}

}  // namespace

TEST_CASE("secondary conditionals are exact count ratios") {
    auto tc = two_cell_case(100, 10);
    auto ltm = extend_to_ltm(tc.model, tc.partition, {indicator(100, {0, 1, 2})});
    REQUIRE(ltm.secondary_count() == 1);
    CHECK(ltm.attachments[0] == 0);
    CHECK(ltm.sec_cond[0].first == 0.3);   // 3 / 10, no smoothing applied
    CHECK(ltm.sec_cond[0].second == 0.0);  // 0 / 90 stays an exact zero
}

TEST_CASE("a full-cell support gives conditionals one and zero") {
    auto tc = two_cell_case(20, 8);
    auto ltm = extend_to_ltm(tc.model, tc.partition,
                             {indicator(20, {0, 1, 2, 3, 4, 5, 6, 7})});
    CHECK(ltm.attachments[0] == 0);
    CHECK(ltm.sec_cond[0].first == 1.0);
    CHECK(ltm.sec_cond[0].second == 0.0);
}

TEST_CASE("a straddling support attaches to the majority cell") {
    auto tc = two_cell_case(20, 10);
    auto ltm = extend_to_ltm(tc.model, tc.partition,
                             {indicator(20, {0, 1, 2, 3, 10, 11})});
    CHECK(ltm.attachments[0] == 0);
    CHECK(ltm.sec_cond[0].first == 0.4);   // 4 / 10
    CHECK(ltm.sec_cond[0].second == 0.2);  // 2 / 10
}

TEST_CASE("attachment ties resolve to the lower cell") {
    auto tc = two_cell_case(20, 10);
    auto even = extend_to_ltm(tc.model, tc.partition,
                              {indicator(20, {0, 1, 10, 11})});
    CHECK(even.attachments[0] == 0);

    auto favors1 = extend_to_ltm(tc.model, tc.partition,
                                 {indicator(20, {0, 10, 11, 12})});
    CHECK(favors1.attachments[0] == 1);
}

TEST_CASE("an all-zero secondary vector attaches to cell 0 with zero conditionals") {
    auto tc = two_cell_case(20, 10);
    auto ltm = extend_to_ltm(tc.model, tc.partition, {indicator(20, {})});
    CHECK(ltm.attachments[0] == 0);
    CHECK(ltm.sec_cond[0].first == 0.0);
    CHECK(ltm.sec_cond[0].second == 0.0);
}

TEST_CASE("a single cluster admits no secondary vectors") {
    auto tc = two_cell_case(10, 10);  // everything in one cell
    REQUIRE(tc.partition.k == 1);
    CHECK_THROWS_AS(extend_to_ltm(tc.model, tc.partition, {indicator(10, {1})}), Error);
    try {
        extend_to_ltm(tc.model, tc.partition, {indicator(10, {1})});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::single_cluster);
    }
    CHECK_NOTHROW(extend_to_ltm(tc.model, tc.partition, {}));
}

TEST_CASE("without secondary vectors the tree scores exactly like the class model") {
    auto tc = two_cell_case(30, 12);
    auto ltm = extend_to_ltm(tc.model, tc.partition, {});
    auto empty = no_secondary(30);
    CHECK(ltm_loglik(ltm, tc.primary, empty) == lcm_loglik(tc.model, tc.primary));
    CHECK(ltm_bic(ltm, tc.primary, empty) == bic(tc.model, tc.primary));
    CHECK(ltm_bic(ltm, tc.primary, empty, LtmDofMode::structural_only) ==
          bic(tc.model, tc.primary));
}

TEST_CASE("full-cell secondary supports cost only the smoothing floor") {
    auto tc = two_cell_case(24, 9);
    std::vector<BinaryVector> sec = {
        indicator(24, {0, 1, 2, 3, 4, 5, 6, 7, 8}),  // exactly cell 0
        indicator(24, {9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23}),
    };
    auto ltm = extend_to_ltm(tc.model, tc.partition, sec);
    const double base = ltm_loglik(extend_to_ltm(tc.model, tc.partition, {}),
                                   tc.primary, no_secondary(24));
    const double with = ltm_loglik(ltm, tc.primary, secondary_data(sec));
    // Every point predicts every secondary bit at confidence 1 - eps; the
    // slack covers the mixture's cross-state terms of order eps^2.
    const double floor_cost = 24.0 * 2.0 * std::log(1.0 - kSmoothEps);
    CHECK(with - base == doctest::Approx(floor_cost).epsilon(1e-3));
}

TEST_CASE("all-zero secondary vectors cost n log(1-eps) each and two dof") {
    auto tc = two_cell_case(20, 10);
    std::vector<BinaryVector> sec = {indicator(20, {}), indicator(20, {})};
    auto with = extend_to_ltm(tc.model, tc.partition, sec);
    auto without = extend_to_ltm(tc.model, tc.partition, {});

    const double dll = ltm_loglik(with, tc.primary, secondary_data(sec)) -
                       ltm_loglik(without, tc.primary, no_secondary(20));
    CHECK(dll == doctest::Approx(2.0 * 20.0 * std::log(1.0 - kSmoothEps)).epsilon(1e-6));

    const double dbic = ltm_bic(with, tc.primary, secondary_data(sec)) -
                        ltm_bic(without, tc.primary, no_secondary(20));
    CHECK(dbic == doctest::Approx(2.0 * 20.0 * std::log(1.0 - kSmoothEps) -
                                  0.5 * 4.0 * std::log(20.0))
                      .epsilon(1e-9));
}

TEST_CASE("dof modes differ by exactly one log n per secondary vector") {
    auto tc = two_cell_case(20, 10);
    std::vector<BinaryVector> sec = {indicator(20, {0, 1}), indicator(20, {10, 11})};
    auto ltm = extend_to_ltm(tc.model, tc.partition, sec);
    auto fd = secondary_data(sec);
    const double pair_mode = ltm_bic(ltm, tc.primary, fd, LtmDofMode::per_secondary_pair);
    const double structural = ltm_bic(ltm, tc.primary, fd, LtmDofMode::structural_only);
    CHECK(structural - pair_mode ==
          doctest::Approx(2.0 * std::log(20.0)).epsilon(1e-12));
}

TEST_CASE("a contained support scores higher than a straddling one") {
    auto tc = two_cell_case(20, 10);
    std::vector<BinaryVector> contained = {indicator(20, {0, 1, 2, 3}), indicator(20, {})};
    std::vector<BinaryVector> straddling = {indicator(20, {0, 1, 10, 11}), indicator(20, {})};
    const double ll_contained =
        ltm_loglik(extend_to_ltm(tc.model, tc.partition, contained), tc.primary,
                   secondary_data(contained));
    const double ll_straddling =
        ltm_loglik(extend_to_ltm(tc.model, tc.partition, straddling), tc.primary,
                   secondary_data(straddling));
    CHECK(ll_contained > ll_straddling + 1.0);
}

TEST_CASE("on ideal data every secondary support stays inside its cluster") {
    auto c = testutil::ideal_case("ideal-a", 10, 12, 3);
    auto all = binarize_all(c.eigs, 0.1);
    std::vector<BinaryVector> primary_vecs(all.begin(), all.begin() + 6);
    std::vector<BinaryVector> secondary_vecs(all.begin() + 6, all.end());
    auto fd = FeatureData::from_binary(primary_vecs);
    auto m = model_from_partition(fd, c.truth);
    auto ltm = extend_to_ltm(m, c.truth, secondary_vecs);
    for (int s = 0; s < ltm.secondary_count(); ++s) {
        CHECK(ltm.sec_cond[static_cast<std::size_t>(s)].second == 0.0);
        CHECK(ltm.sec_cond[static_cast<std::size_t>(s)].first <= 1.0);
    }
}

TEST_CASE("length mismatches are rejected") {
    auto tc = two_cell_case(20, 10);
    CHECK_THROWS_AS(extend_to_ltm(tc.model, tc.partition, {indicator(19, {0})}), Error);

    LCModel wrong_k = tc.model;
    wrong_k.k = 3;
    CHECK_THROWS_AS(extend_to_ltm(wrong_k, tc.partition, {}), Error);

    auto ltm = extend_to_ltm(tc.model, tc.partition, {indicator(20, {0}), indicator(20, {})});
    std::vector<BinaryVector> two_pairs = {indicator(20, {0}), indicator(20, {1}),
                                           indicator(20, {2}), indicator(20, {3})};
    CHECK_THROWS_AS(ltm_loglik(ltm, tc.primary, secondary_data(two_pairs)), Error);

    FeatureData short_rows;
    short_rows.rows = Matrix::Zero(10, 2);
    CHECK_THROWS_AS(ltm_loglik(ltm, tc.primary, short_rows), Error);
}

TEST_CASE("the full driver recovers the ideal partitions and their q") {
    auto b = testutil::ideal_case("ideal-b", 10, 40, 1);
    auto res = ltm_rounding(b.eigs, 40, 0.1, 5, 1);
    CHECK(res.partition == b.truth);
    CHECK(res.q_selected == 5);
    CHECK(res.k_selected == 5);
    CHECK_FALSE(res.boundary_warning);

    // Trace rows cover q = 2..20 in order; the selected row is the argmax.
    REQUIRE(res.trace.size() == 19);
    double best = -std::numeric_limits<double>::infinity();
    int best_q = 0;
    for (std::size_t i = 0; i < res.trace.size(); ++i) {
        CHECK(res.trace[i].q == static_cast<int>(i) + 2);
        if (res.trace[i].ltm_bic > best) {
            best = res.trace[i].ltm_bic;
            best_q = res.trace[i].q;
        }
    }
    CHECK(best_q == res.q_selected);
    CHECK(res.params.K == 40);
    CHECK(res.params.delta == 0.1);

    auto a = testutil::ideal_case("ideal-a", 10, 40, 1);
    auto res_a = ltm_rounding(a.eigs, 40, 0.1, 5, 1);
    CHECK(res_a.partition == a.truth);
    CHECK(res_a.q_selected == 3);
    CHECK(res_a.k_selected == 3);
}

TEST_CASE("runs are deterministic in the seed") {
    auto c = testutil::ideal_case("ideal-a", 10, 16, 6);
    auto r1 = ltm_rounding(c.eigs, 16, 0.1, 3, 9);
    auto r2 = ltm_rounding(c.eigs, 16, 0.1, 3, 9);
    CHECK(r1.partition == r2.partition);
    CHECK(r1.q_selected == r2.q_selected);
    REQUIRE(r1.trace.size() == r2.trace.size());
    for (std::size_t i = 0; i < r1.trace.size(); ++i) {
        CHECK(r1.trace[i].lcm_bic == r2.trace[i].lcm_bic);
        CHECK(r1.trace[i].ltm_bic == r2.trace[i].ltm_bic);
    }
}

TEST_CASE("a structureless eigensystem falls back to the smallest q") {
    EigenSystem eigs;
    eigs.eigenvalues = Vector::Zero(8);
    eigs.eigenvectors = Matrix::Zero(24, 8);
    auto res = ltm_rounding(eigs, 8, 0.1, 2, 0);
    // Every q yields one cluster, which cannot host secondary latents;
    // the all-minus-infinity tie keeps the smallest q.
    CHECK(res.q_selected == 2);
    CHECK(res.k_selected == 1);
    CHECK(res.partition == Partition::single_cell(24));
    CHECK_FALSE(res.boundary_warning);
    for (const auto& row : res.trace)
        CHECK(row.ltm_bic == -std::numeric_limits<double>::infinity());
}

TEST_CASE("selection at the q ceiling raises the boundary warning") {
    auto c = testutil::ideal_case("ideal-a", 10, 5, 2);
    auto res = ltm_rounding(c.eigs, 5, 0.1, 3, 1);
    CHECK(res.q_selected == 2);  // floor(5 / 2) = 2 is the only candidate
    CHECK(res.boundary_warning);
}

TEST_CASE("driver parameter validation") {
    auto c = testutil::ideal_case("ideal-a", 10, 8, 1);
    CHECK_THROWS_AS(ltm_rounding(c.eigs, 9, 0.1, 3, 0), Error);    // K too large
    CHECK_THROWS_AS(ltm_rounding(c.eigs, 3, 0.1, 3, 0), Error);    // floor(K/2) < 2
    CHECK_THROWS_AS(ltm_rounding(c.eigs, 8, 0.0, 3, 0), Error);    // delta bounds
    CHECK_THROWS_AS(ltm_rounding(c.eigs, 8, 1.0, 3, 0), Error);
    CHECK_THROWS_AS(ltm_rounding(c.eigs, 8, 0.1, 0, 0), Error);    // restarts
}
