#pragma once

#include "specround/lcm.hpp"
#include "specround/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace specround {

/// Free-parameter accounting for the latent tree BIC. The deterministic
/// Y -> Y_r links never count; the two conditionals per secondary
/// vector count under `per_secondary_pair` (default) and are treated as
/// structurally fixed under `structural_only`.
enum class LtmDofMode { per_secondary_pair, structural_only };

/// Latent tree model: a latent class model plus one binary latent Y_r
/// per cluster, where Y_r = 1 exactly when Y = r, and each secondary
/// binary vector hangs off the Y_r that covers its support best.
/// Model states and partition cells share indices (state y <-> cell y).
struct LTModel {
    LCModel primary;
    Partition clusters;
    std::vector<int> attachments;  // r(s) per secondary vector
    // (P(e_s=1 | Y_r=1), P(e_s=1 | Y_r=0)) as exact count ratios;
    // smoothing happens only when likelihoods are evaluated.
    std::vector<std::pair<double, double>> sec_cond;

    int secondary_count() const { return static_cast<int>(attachments.size()); }
};

/// Attaches each secondary vector s to the cell r maximizing
/// |D_s intersect C_r| (lowest r on ties) and stores the conditionals
///   P(e_s=1 | Y_r=1) = |D_s intersect C_r| / |C_r|
///   P(e_s=1 | Y_r=0) = |D_s minus C_r| / (n - |C_r|).
/// Requires part.k == m.k (cells aligned with model states).
LTModel extend_to_ltm(const LCModel& m, const Partition& part,
                      const std::vector<BinaryVector>& secondary);

/// Joint log-likelihood: the latent class part times, per secondary
/// vector, the Bernoulli factor selected by whether the mixture state
/// equals the attachment cell. Secondary conditionals are clamped to
/// [kSmoothEps, 1 - kSmoothEps] for evaluation.
double ltm_loglik(const LTModel& m, const FeatureData& primary_data,
                  const FeatureData& secondary_data);

/// ltm_loglik - (d/2) ln n with d = (k-1) + 2q k (+ 2 per secondary
/// vector under per_secondary_pair).
double ltm_bic(const LTModel& m, const FeatureData& primary_data,
               const FeatureData& secondary_data,
               LtmDofMode mode = LtmDofMode::per_secondary_pair);

struct TraceEntry {
    int q = 0;
    int k = 0;
    double lcm_bic = 0.0;
    double ltm_bic = 0.0;
};

struct RoundingParams {
    int K = 40;
    double delta = 0.1;
    int restarts = 5;
    std::uint64_t seed = 0;
    LtmDofMode dof_mode = LtmDofMode::per_secondary_pair;
};

struct RoundingResult {
    Partition partition;
    int q_selected = 0;
    int k_selected = 0;
    std::vector<TraceEntry> trace;
    RoundingParams params;
    // The best score sat at q = floor(K/2): K is probably too small.
    bool boundary_warning = false;
};

/// Full driver: for q = 2..floor(K/2), learn a latent class model with
/// BIC-selected k on the first q binarized pairs, extend it with the
/// remaining binary vectors, and keep the partition from the q with the
/// best latent tree BIC (smallest such q on ties). The secondary part
/// only steers the choice of q; the partition always comes from the
/// latent class part.
RoundingResult ltm_rounding(const EigenSystem& eigs, const RoundingParams& params);

RoundingResult ltm_rounding(const EigenSystem& eigs, int K, double delta,
                            int restarts, std::uint64_t seed);

}  // namespace specround
