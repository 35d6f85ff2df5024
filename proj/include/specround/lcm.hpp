#pragma once

#include "specround/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace specround {

/// Smoothing floor for probabilities. Conditionals live in
/// [kSmoothEps, 1 - kSmoothEps] and prior entries in [kSmoothEps, 1];
/// without the floor the ideal case yields deterministic features and
/// -inf log-likelihoods.
inline constexpr double kSmoothEps = 1e-4;

/// Binary feature rows, one per data point, columns ordered
/// e_1+, e_1-, ..., e_q+, e_q-. Stored as doubles in {0,1} so the EM
/// steps are matrix products.
struct FeatureData {
    Matrix rows;  // n x (2q)
    std::vector<std::pair<int, BinaryVector::Side>> feature_origin;

    int n() const { return static_cast<int>(rows.rows()); }
    int f() const { return static_cast<int>(rows.cols()); }
    int q() const { return f() / 2; }

    /// Packs binarized vectors (plus/minus pairs in order) into rows.
    static FeatureData from_binary(const std::vector<BinaryVector>& vecs);
};

/// Latent class model: mixture of independent Bernoulli features with a
/// k-state latent class variable.
struct LCModel {
    std::int32_t k = 0;
    Vector prior;  // length k, sums to 1
    Matrix cond;   // f x k, cond(f, y) = P(feature f = 1 | Y = y)
    std::vector<std::pair<int, BinaryVector::Side>> feature_origin;

    int f() const { return static_cast<int>(cond.rows()); }
    int q() const { return f() / 2; }
};

/// Log-likelihood of the data under the model:
/// sum_i log sum_y P(y) prod_f P(feature_f = row_if | y).
double lcm_loglik(const LCModel& m, const FeatureData& data);

/// Best model over `restarts` random initializations (random
/// responsibilities from the seeded generator; ties keep the earlier
/// restart). Each run alternates E/M steps until the log-likelihood
/// improvement falls below 1e-6 relative or 500 iterations pass. The
/// M-step floors parameters at kSmoothEps, which keeps EM monotone
/// (box-constrained M-step) and likelihoods finite.
std::pair<LCModel, double> em_fit(const FeatureData& data, int k, int restarts,
                                  std::uint64_t seed);

/// Maximum-likelihood parameters read directly off a partition: prior =
/// cell proportions, conditionals = within-cell feature means, smoothed.
LCModel model_from_partition(const FeatureData& data, const Partition& part);

/// P(Y = y | row), normalized.
Vector posterior(const LCModel& m, const std::vector<std::uint8_t>& row);

/// Maximum-posterior assignment (ties to the lowest state), relabeled
/// canonically; states that win no point disappear.
Partition hard_partition(const LCModel& m, const FeatureData& data);

/// Hard partition together with the model state behind each canonical
/// cell (cell_state[c] = state the points of cell c chose).
struct HardAssignment {
    Partition partition;
    std::vector<std::int32_t> cell_state;
};

HardAssignment hard_assign(const LCModel& m, const FeatureData& data);

/// BIC = loglik - (d/2) ln n with d = (k-1) + 2q k.
double bic(const LCModel& m, const FeatureData& data);

struct KTraceEntry {
    int k = 0;
    double loglik = 0.0;
    double bic = 0.0;
};

struct SelectResult {
    LCModel model;
    double loglik = 0.0;
    double bic = 0.0;
    std::vector<KTraceEntry> trace;
};

/// Fits k = 2, 3, ... and stops at the first BIC decrease (hard cap 20),
/// returning the maximum-BIC model and the full trace.
SelectResult select_k(const FeatureData& data, int restarts, std::uint64_t seed);

}  // namespace specround
