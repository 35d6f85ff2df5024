#include "specround/ltm.hpp"

#include "specround/binarize.hpp"
#include "specround/error.hpp"
#include "specround/parallel.hpp"
#include "specround/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace specround {

namespace {

double clamp_prob(double p) {
    return std::min(std::max(p, kSmoothEps), 1.0 - kSmoothEps);
}

/// Reorders (and, if states won no points, drops) model states so that
/// state y is exactly cell y of the hard partition. A pure permutation
/// leaves the likelihood untouched; dropping a dead state removes its
/// floor-level prior mass.
LCModel align_to_cells(const LCModel& m, const std::vector<std::int32_t>& cell_state) {
    LCModel out;
    out.k = static_cast<std::int32_t>(cell_state.size());
    out.prior.resize(out.k);
    out.cond.resize(m.cond.rows(), out.k);
    for (std::int32_t c = 0; c < out.k; ++c) {
        out.prior(c) = m.prior(cell_state[static_cast<std::size_t>(c)]);
        out.cond.col(c) = m.cond.col(cell_state[static_cast<std::size_t>(c)]);
    }
    out.prior /= out.prior.sum();
    out.feature_origin = m.feature_origin;
    return out;
}

}  // namespace

LTModel extend_to_ltm(const LCModel& m, const Partition& part,
                      const std::vector<BinaryVector>& secondary) {
    if (part.k != m.k)
        fail(ErrorCode::invalid_argument,
             "partition cells must align with model states");
    if (part.k == 1 && !secondary.empty())
        fail(ErrorCode::single_cluster,
             "a single cluster leaves P(e=1 | Y_r=0) undefined (empty complement)");

    const int n = part.n();
    const std::vector<int> sizes = part.cell_sizes();

    LTModel out;
    out.primary = m;
    out.clusters = part;
    out.attachments.reserve(secondary.size());
    out.sec_cond.reserve(secondary.size());
    for (const BinaryVector& bv : secondary) {
        if (bv.n() != n)
            fail(ErrorCode::length_mismatch, "secondary vector length does not match");
        std::vector<int> inter(static_cast<std::size_t>(part.k), 0);
        int support = 0;
        for (int i = 0; i < n; ++i) {
            if (!bv.bits[static_cast<std::size_t>(i)]) continue;
            ++support;
            ++inter[static_cast<std::size_t>(part.assignment[static_cast<std::size_t>(i)])];
        }
        int r = 0;
        for (int c = 1; c < part.k; ++c)
            if (inter[static_cast<std::size_t>(c)] > inter[static_cast<std::size_t>(r)])
                r = c;  // ties keep the lowest cell
        const double in_r = inter[static_cast<std::size_t>(r)];
        const double cond1 = in_r / sizes[static_cast<std::size_t>(r)];
        const double cond0 = (support - in_r) / static_cast<double>(n - sizes[static_cast<std::size_t>(r)]);
        out.attachments.push_back(r);
        out.sec_cond.emplace_back(cond1, cond0);
    }
    return out;
}

double ltm_loglik(const LTModel& m, const FeatureData& primary_data,
                  const FeatureData& secondary_data) {
    if (primary_data.f() != m.primary.f())
        fail(ErrorCode::length_mismatch, "primary feature count does not match model");
    if (secondary_data.f() != m.secondary_count())
        fail(ErrorCode::length_mismatch, "secondary feature count does not match model");
    if (secondary_data.f() > 0 && secondary_data.n() != primary_data.n())
        fail(ErrorCode::length_mismatch, "primary and secondary row counts differ");

    // With Y_r collapsed through Y_r = [Y = r], the tree scores like a
    // latent class model whose feature block is the primary conditionals
    // stacked over a per-state secondary table.
    LCModel stacked;
    stacked.k = m.primary.k;
    stacked.prior = m.primary.prior;
    stacked.cond.resize(primary_data.f() + secondary_data.f(), m.primary.k);
    stacked.cond.topRows(primary_data.f()) = m.primary.cond;
    for (int s = 0; s < m.secondary_count(); ++s)
        for (std::int32_t y = 0; y < m.primary.k; ++y)
            stacked.cond(primary_data.f() + s, y) =
                clamp_prob(y == m.attachments[static_cast<std::size_t>(s)]
                               ? m.sec_cond[static_cast<std::size_t>(s)].first
                               : m.sec_cond[static_cast<std::size_t>(s)].second);

    FeatureData all;
    all.rows.resize(primary_data.n(), stacked.cond.rows());
    all.rows.leftCols(primary_data.f()) = primary_data.rows;
    if (secondary_data.f() > 0) all.rows.rightCols(secondary_data.f()) = secondary_data.rows;

    const double ll = lcm_loglik(stacked, all);
    if (!std::isfinite(ll))
        fail(ErrorCode::nonfinite_likelihood, "latent tree likelihood is not finite");
    return ll;
}

double ltm_bic(const LTModel& m, const FeatureData& primary_data,
               const FeatureData& secondary_data, LtmDofMode mode) {
    double d = (m.primary.k - 1) +
               static_cast<double>(primary_data.f()) * m.primary.k;
    if (mode == LtmDofMode::per_secondary_pair) d += 2.0 * m.secondary_count();
    return ltm_loglik(m, primary_data, secondary_data) -
           0.5 * d * std::log(static_cast<double>(primary_data.n()));
}

RoundingResult ltm_rounding(const EigenSystem& eigs, const RoundingParams& params) {
    if (params.K > eigs.K())
        fail(ErrorCode::k_too_large, "K exceeds the computed eigensystem");
    const int q_max = params.K / 2;
    if (q_max < 2)
        fail(ErrorCode::invalid_argument,
             "need floor(K/2) >= 2, got K = " + std::to_string(params.K));
    if (!(params.delta > 0.0 && params.delta < 1.0))
        fail(ErrorCode::invalid_argument, "delta must lie in (0, 1)");
    if (params.restarts < 1) fail(ErrorCode::invalid_argument, "restarts must be >= 1");

    std::vector<BinaryVector> all = binarize_all(eigs, params.delta);
    all.resize(static_cast<std::size_t>(2 * params.K));  // only e_1..e_K matter

    struct PerQ {
        Partition partition;
        TraceEntry entry;
    };
    std::vector<PerQ> runs(static_cast<std::size_t>(q_max - 1));

    parallel_for(q_max - 1, [&](int idx) {
        const int q = idx + 2;
        std::vector<BinaryVector> primary_vecs(all.begin(), all.begin() + 2 * q);
        FeatureData fd = FeatureData::from_binary(primary_vecs);
        SelectResult sel =
            select_k(fd, params.restarts, derive_seed(params.seed, static_cast<std::uint64_t>(q)));
        HardAssignment ha = hard_assign(sel.model, fd);

        PerQ& run = runs[static_cast<std::size_t>(idx)];
        run.entry.q = q;
        run.entry.k = ha.partition.k;
        run.entry.lcm_bic = sel.bic;

        std::vector<BinaryVector> secondary_vecs(all.begin() + 2 * q, all.end());
        try {
            LCModel aligned = align_to_cells(sel.model, ha.cell_state);
            LTModel ltm = extend_to_ltm(aligned, ha.partition, secondary_vecs);
            FeatureData sec_fd = FeatureData::from_binary(secondary_vecs);
            run.entry.ltm_bic = ltm_bic(ltm, fd, sec_fd, params.dof_mode);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::single_cluster) throw;
            // A one-cluster partition cannot carry secondary latents;
            // score it out of the running rather than aborting the sweep.
            run.entry.ltm_bic = -std::numeric_limits<double>::infinity();
        }
        run.partition = std::move(ha.partition);
    });

    RoundingResult out;
    out.params = params;
    out.trace.reserve(runs.size());
    int best = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        out.trace.push_back(runs[i].entry);
        if (runs[i].entry.ltm_bic > runs[static_cast<std::size_t>(best)].entry.ltm_bic)
            best = static_cast<int>(i);  // ties keep the smaller q
    }
    PerQ& chosen = runs[static_cast<std::size_t>(best)];
    out.partition = std::move(chosen.partition);
    out.q_selected = chosen.entry.q;
    out.k_selected = chosen.entry.k;
    out.boundary_warning = (out.q_selected == q_max);
    return out;
}

RoundingResult ltm_rounding(const EigenSystem& eigs, int K, double delta,
                            int restarts, std::uint64_t seed) {
    RoundingParams params;
    params.K = K;
    params.delta = delta;
    params.restarts = restarts;
    params.seed = seed;
    return ltm_rounding(eigs, params);
}

}  // namespace specround
