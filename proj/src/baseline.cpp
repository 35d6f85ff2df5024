#include "specround/baseline.hpp"

#include "specround/error.hpp"
#include "specround/rng.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

namespace specround {

namespace {

int pick_index(std::mt19937_64& rng, int n) {
    int i = static_cast<int>(uniform_unit(rng) * n);
    return i < n ? i : n - 1;
}

/// k-means++ seeding: each next center drawn with probability
/// proportional to squared distance from the chosen set.
Matrix seed_centers(const Matrix& u, int k, std::mt19937_64& rng) {
    const int n = static_cast<int>(u.rows());
    Matrix centers(k, u.cols());
    centers.row(0) = u.row(pick_index(rng, n));
    Vector d2 = (u.rowwise() - centers.row(0)).rowwise().squaredNorm();
    for (int c = 1; c < k; ++c) {
        const double total = d2.sum();
        int next = -1;
        if (total > 0.0) {
            double target = uniform_unit(rng) * total;
            double acc = 0.0;
            for (int i = 0; i < n; ++i) {
                acc += d2(i);
                if (acc >= target) {
                    next = i;
                    break;
                }
            }
            if (next < 0) next = n - 1;
        } else {
            // All remaining points coincide with a center; any choice works.
            next = pick_index(rng, n);
        }
        centers.row(c) = u.row(next);
        d2 = d2.cwiseMin((u.rowwise() - centers.row(c)).rowwise().squaredNorm());
    }
    return centers;
}

struct KmeansRun {
    std::vector<std::int32_t> assignment;
    double wcss = std::numeric_limits<double>::infinity();
};

KmeansRun lloyd(const Matrix& u, int k, std::uint64_t run_seed) {
    const int n = static_cast<int>(u.rows());
    std::mt19937_64 rng(run_seed);
    Matrix centers = seed_centers(u, k, rng);

    KmeansRun run;
    run.assignment.assign(static_cast<std::size_t>(n), 0);
    for (int iter = 0; iter < 300; ++iter) {
        bool changed = (iter == 0);
        double wcss = 0.0;
        for (int i = 0; i < n; ++i) {
            int best = 0;
            double best_d = (u.row(i) - centers.row(0)).squaredNorm();
            for (int c = 1; c < k; ++c) {
                const double d = (u.row(i) - centers.row(c)).squaredNorm();
                if (d < best_d) {  // ties keep the lower center index
                    best_d = d;
                    best = c;
                }
            }
            if (run.assignment[static_cast<std::size_t>(i)] != best) {
                run.assignment[static_cast<std::size_t>(i)] = best;
                changed = true;
            }
            wcss += best_d;
        }
        run.wcss = wcss;
        if (!changed) break;

        Matrix sums = Matrix::Zero(k, u.cols());
        std::vector<int> counts(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < n; ++i) {
            sums.row(run.assignment[static_cast<std::size_t>(i)]) += u.row(i);
            ++counts[static_cast<std::size_t>(run.assignment[static_cast<std::size_t>(i)])];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] > 0) {
                centers.row(c) = sums.row(c) / counts[static_cast<std::size_t>(c)];
                continue;
            }
            // Empty cluster: reseat it on the point farthest from its
            // current center (lowest index on ties).
            int far = 0;
            double far_d = -1.0;
            for (int i = 0; i < n; ++i) {
                const double d =
                    (u.row(i) -
                     centers.row(run.assignment[static_cast<std::size_t>(i)]))
                        .squaredNorm();
                if (d > far_d) {
                    far_d = d;
                    far = i;
                }
            }
            centers.row(c) = u.row(far);
        }
    }
    return run;
}

}  // namespace

Partition kmeans_rounding(const EigenSystem& eigs, int k, int restarts,
                          std::uint64_t seed) {
    if (k < 2 || k > eigs.K())
        fail(ErrorCode::k_out_of_range,
             "k must be in [2, " + std::to_string(eigs.K()) + "], got " + std::to_string(k));
    if (restarts < 1) fail(ErrorCode::invalid_argument, "restarts must be >= 1");
    if (k > eigs.n()) fail(ErrorCode::k_out_of_range, "k exceeds the number of points");

    const Matrix u = eigs.eigenvectors.leftCols(k);
    KmeansRun best;
    for (int r = 0; r < restarts; ++r) {
        KmeansRun run = lloyd(u, k, derive_seed(seed, static_cast<std::uint64_t>(r)));
        if (run.wcss < best.wcss) best = std::move(run);  // ties keep earlier
    }
    return Partition::from_labels(best.assignment);
}

}  // namespace specround
