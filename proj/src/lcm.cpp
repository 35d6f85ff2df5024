#include "specround/lcm.hpp"

#include "specround/error.hpp"
#include "specround/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace specround {

namespace {

/// Rows collapsed to unique patterns with multiplicities. EM over
/// patterns weighted by count gives the same likelihood and updates as
/// EM over raw rows, at a fraction of the cost (the ideal case has only
/// about k_t distinct rows).
struct Collapsed {
    Matrix x;                   // P x F unique patterns
    Vector w;                   // P multiplicities
    std::vector<int> of_point;  // n -> pattern index
    int n = 0;
};

Collapsed collapse(const Matrix& rows) {
    const int n = static_cast<int>(rows.rows());
    const int f = static_cast<int>(rows.cols());
    Collapsed c;
    c.n = n;
    c.of_point.resize(static_cast<std::size_t>(n));
    std::unordered_map<std::string, int> index;
    std::vector<int> counts;
    std::vector<int> first_row;
    std::string key(static_cast<std::size_t>(f), '0');
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < f; ++j)
            key[static_cast<std::size_t>(j)] = rows(i, j) != 0.0 ? '1' : '0';
        auto [it, inserted] = index.try_emplace(key, static_cast<int>(counts.size()));
        if (inserted) {
            counts.push_back(0);
            first_row.push_back(i);
        }
        ++counts[static_cast<std::size_t>(it->second)];
        c.of_point[static_cast<std::size_t>(i)] = it->second;
    }
    const int p = static_cast<int>(counts.size());
    c.x.resize(p, f);
    c.w.resize(p);
    for (int r = 0; r < p; ++r) {
        c.x.row(r) = rows.row(first_row[static_cast<std::size_t>(r)]);
        c.w(r) = counts[static_cast<std::size_t>(r)];
    }
    return c;
}

/// Per-pattern membership log-scores: log P(y) + log P(pattern | y).
Matrix log_scores(const Collapsed& c, const Vector& prior, const Matrix& cond) {
    Matrix log_c = cond.array().log().matrix();
    Matrix log_not = (1.0 - cond.array()).log().matrix();
    Matrix scores = c.x * (log_c - log_not);  // P x k
    scores.rowwise() += log_not.colwise().sum();
    scores.rowwise() += prior.array().log().matrix().transpose();
    return scores;
}

/// Row-wise log-sum-exp; optionally leaves normalized responsibilities
/// in `scores`.
Vector logsumexp_rows(Matrix& scores, bool normalize) {
    Vector row_max = scores.rowwise().maxCoeff();
    Matrix shifted = (scores.colwise() - row_max).array().exp().matrix();
    Vector sums = shifted.rowwise().sum();
    Vector lse = row_max.array() + sums.array().log();
    if (normalize) scores = shifted.array().colwise() / sums.array();
    return lse;
}

double weighted_loglik(const Collapsed& c, const Vector& prior, const Matrix& cond) {
    Matrix scores = log_scores(c, prior, cond);
    return c.w.dot(logsumexp_rows(scores, false));
}

/// Projects onto the simplex with every entry >= eps: violators get
/// pinned at eps, the rest rescaled to the remaining mass, repeated
/// until stable. This is the box-constrained maximizer of the expected
/// complete-data log-likelihood, so EM stays monotone under it.
Vector floor_prior(Vector p, double eps) {
    const int k = static_cast<int>(p.size());
    if (k == 1) {
        p(0) = 1.0;
        return p;
    }
    p = p.cwiseMax(0.0);
    double s = p.sum();
    if (!(s > 0.0) || k * eps >= 1.0) return Vector::Constant(k, 1.0 / k);
    p /= s;
    std::vector<char> fixed(static_cast<std::size_t>(k), 0);
    for (;;) {
        int nfixed = 0;
        double free_sum = 0.0;
        for (int i = 0; i < k; ++i) {
            if (fixed[static_cast<std::size_t>(i)])
                ++nfixed;
            else
                free_sum += p(i);
        }
        const double target = 1.0 - nfixed * eps;
        if (free_sum <= 0.0) {
            const int nfree = k - nfixed;
            for (int i = 0; i < k; ++i)
                p(i) = fixed[static_cast<std::size_t>(i)] ? eps : target / nfree;
            return p;
        }
        bool changed = false;
        for (int i = 0; i < k; ++i) {
            if (fixed[static_cast<std::size_t>(i)]) continue;
            if (p(i) * target / free_sum < eps) {
                fixed[static_cast<std::size_t>(i)] = 1;
                changed = true;
            }
        }
        if (!changed) {
            for (int i = 0; i < k; ++i)
                p(i) = fixed[static_cast<std::size_t>(i)] ? eps : p(i) * target / free_sum;
            return p;
        }
    }
}

/// M-step from responsibilities (pattern-weighted), with smoothing.
void maximize(const Collapsed& c, const Matrix& resp, Vector& prior, Matrix& cond) {
    Vector ny = resp.transpose() * c.w;  // expected count per state
    prior = floor_prior(ny / static_cast<double>(c.n), kSmoothEps);
    Matrix weighted = resp.array().colwise() * c.w.array();
    Matrix num = c.x.transpose() * weighted;  // F x k
    Vector safe = ny.cwiseMax(1e-300);
    cond = (num.array().rowwise() / safe.transpose().array())
               .cwiseMax(kSmoothEps)
               .cwiseMin(1.0 - kSmoothEps)
               .matrix();
}

struct Fit {
    Vector prior;
    Matrix cond;
    double loglik = -std::numeric_limits<double>::infinity();
};

Matrix random_resp(int p, int k, std::uint64_t run_seed) {
    std::mt19937_64 rng(run_seed);
    Matrix resp(p, k);
    for (int i = 0; i < p; ++i) {
        double sum = 0.0;
        for (int y = 0; y < k; ++y) {
            double u = uniform_unit(rng) + 0.01;  // keep rows off the boundary
            resp(i, y) = u;
            sum += u;
        }
        resp.row(i) /= sum;
    }
    return resp;
}

/// Hard-assigns every pattern to the nearest of the k heaviest patterns.
/// Random starts can leave two thin classes merged across many restarts;
/// this start is deterministic and lands on the optimum outright whenever
/// the classes are separable in the features.
Matrix prototype_resp(const Collapsed& c, int k) {
    const int p = static_cast<int>(c.x.rows());
    std::vector<int> order(static_cast<std::size_t>(p));
    std::iota(order.begin(), order.end(), 0);
    std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](int a, int b) {
        if (c.w[a] != c.w[b]) return c.w[a] > c.w[b];
        return a < b;  // weight ties keep first-seen pattern order
    });
    Matrix resp = Matrix::Zero(p, k);
    for (int i = 0; i < p; ++i) {
        int best = 0;
        double bestd = std::numeric_limits<double>::infinity();
        for (int j = 0; j < k; ++j) {
            double d = (c.x.row(i) - c.x.row(order[static_cast<std::size_t>(j)])).squaredNorm();
            if (d < bestd) {
                bestd = d;
                best = j;
            }
        }
        resp(i, best) = 1.0;
    }
    return resp;
}

Fit em_run(const Collapsed& c, Matrix resp) {
    Fit fit;
    maximize(c, resp, fit.prior, fit.cond);
    double prev = -std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 500; ++iter) {
        Matrix scores = log_scores(c, fit.prior, fit.cond);
        Vector lse = logsumexp_rows(scores, true);
        fit.loglik = c.w.dot(lse);
        if (!std::isfinite(fit.loglik))
            fail(ErrorCode::nonfinite_likelihood, "EM produced a non-finite log-likelihood");
        if (fit.loglik - prev <= 1e-6 * std::max(1.0, std::abs(fit.loglik))) break;
        prev = fit.loglik;
        maximize(c, scores, fit.prior, fit.cond);
    }
    return fit;
}

Fit em_best(const Collapsed& c, int k, int restarts, std::uint64_t seed) {
    if (k < 1) fail(ErrorCode::k_out_of_range, "k must be >= 1");
    if (restarts < 1) fail(ErrorCode::invalid_argument, "restarts must be >= 1");
    const int p = static_cast<int>(c.x.rows());
    Fit best;
    for (int r = 0; r < restarts; ++r) {
        Matrix resp = (r == 0 && p >= k)
                          ? prototype_resp(c, k)
                          : random_resp(p, k, derive_seed(seed, static_cast<std::uint64_t>(r)));
        Fit fit = em_run(c, std::move(resp));
        if (fit.loglik > best.loglik) best = std::move(fit);  // ties keep earlier
    }
    return best;
}

void check_nonempty(const FeatureData& data) {
    if (data.n() == 0 || data.f() == 0)
        fail(ErrorCode::empty_data, "feature data must have points and features");
}

void check_binary(const Matrix& rows) {
    for (Eigen::Index i = 0; i < rows.rows(); ++i)
        for (Eigen::Index j = 0; j < rows.cols(); ++j)
            if (rows(i, j) != 0.0 && rows(i, j) != 1.0)
                fail(ErrorCode::invalid_argument, "feature entries must be 0 or 1");
}

}  // namespace

FeatureData FeatureData::from_binary(const std::vector<BinaryVector>& vecs) {
    if (vecs.empty()) fail(ErrorCode::empty_data, "no binary vectors");
    if (vecs.size() % 2 != 0)
        fail(ErrorCode::invalid_argument, "expected plus/minus pairs of binary vectors");
    FeatureData data;
    const int n = vecs.front().n();
    data.rows.resize(n, static_cast<Eigen::Index>(vecs.size()));
    data.feature_origin.reserve(vecs.size());
    for (std::size_t j = 0; j < vecs.size(); ++j) {
        if (vecs[j].n() != n)
            fail(ErrorCode::length_mismatch, "binary vectors differ in length");
        for (int i = 0; i < n; ++i)
            data.rows(i, static_cast<Eigen::Index>(j)) =
                vecs[j].bits[static_cast<std::size_t>(i)] ? 1.0 : 0.0;
        data.feature_origin.emplace_back(vecs[j].eigen_index, vecs[j].side);
    }
    return data;
}

double lcm_loglik(const LCModel& m, const FeatureData& data) {
    check_nonempty(data);
    if (m.f() != data.f())
        fail(ErrorCode::length_mismatch, "model and data feature counts differ");
    return weighted_loglik(collapse(data.rows), m.prior, m.cond);
}

std::pair<LCModel, double> em_fit(const FeatureData& data, int k, int restarts,
                                  std::uint64_t seed) {
    check_nonempty(data);
    check_binary(data.rows);
    Collapsed c = collapse(data.rows);
    Fit fit = em_best(c, k, restarts, seed);
    LCModel m;
    m.k = k;
    m.prior = std::move(fit.prior);
    m.cond = std::move(fit.cond);
    m.feature_origin = data.feature_origin;
    return {std::move(m), fit.loglik};
}

LCModel model_from_partition(const FeatureData& data, const Partition& part) {
    check_nonempty(data);
    if (part.n() != data.n())
        fail(ErrorCode::length_mismatch, "partition size does not match data");
    const int k = part.k;
    Vector counts = Vector::Zero(k);
    Matrix num = Matrix::Zero(data.f(), k);
    for (int i = 0; i < data.n(); ++i) {
        const std::int32_t y = part.assignment[static_cast<std::size_t>(i)];
        counts(y) += 1.0;
        num.col(y) += data.rows.row(i).transpose();
    }
    LCModel m;
    m.k = k;
    m.prior = floor_prior(counts / static_cast<double>(data.n()), kSmoothEps);
    m.cond = (num.array().rowwise() / counts.cwiseMax(1e-300).transpose().array())
                 .cwiseMax(kSmoothEps)
                 .cwiseMin(1.0 - kSmoothEps)
                 .matrix();
    m.feature_origin = data.feature_origin;
    return m;
}

Vector posterior(const LCModel& m, const std::vector<std::uint8_t>& row) {
    if (static_cast<int>(row.size()) != m.f())
        fail(ErrorCode::length_mismatch, "row length does not match model");
    Vector log_post = m.prior.array().log();
    for (int f = 0; f < m.f(); ++f)
        for (int y = 0; y < m.k; ++y)
            log_post(y) += std::log(row[static_cast<std::size_t>(f)] ? m.cond(f, y)
                                                                     : 1.0 - m.cond(f, y));
    const double mx = log_post.maxCoeff();
    Vector p = (log_post.array() - mx).exp();
    return p / p.sum();
}

HardAssignment hard_assign(const LCModel& m, const FeatureData& data) {
    check_nonempty(data);
    if (m.f() != data.f())
        fail(ErrorCode::length_mismatch, "model and data feature counts differ");
    Collapsed c = collapse(data.rows);
    Matrix scores = log_scores(c, m.prior, m.cond);
    std::vector<std::int32_t> winner(static_cast<std::size_t>(scores.rows()));
    for (Eigen::Index p = 0; p < scores.rows(); ++p) {
        int best = 0;
        for (int y = 1; y < m.k; ++y)
            if (scores(p, y) > scores(p, best)) best = y;  // ties keep lowest state
        winner[static_cast<std::size_t>(p)] = best;
    }
    std::vector<std::int32_t> labels(static_cast<std::size_t>(data.n()));
    for (int i = 0; i < data.n(); ++i)
        labels[static_cast<std::size_t>(i)] =
            winner[static_cast<std::size_t>(c.of_point[static_cast<std::size_t>(i)])];

    HardAssignment out;
    out.partition = Partition::from_labels(labels);
    out.cell_state.resize(static_cast<std::size_t>(out.partition.k));
    for (int i = 0; i < data.n(); ++i)
        out.cell_state[static_cast<std::size_t>(
            out.partition.assignment[static_cast<std::size_t>(i)])] =
            labels[static_cast<std::size_t>(i)];
    return out;
}

Partition hard_partition(const LCModel& m, const FeatureData& data) {
    return hard_assign(m, data).partition;
}

double bic(const LCModel& m, const FeatureData& data) {
    const double d = (m.k - 1) + static_cast<double>(m.f()) * m.k;
    return lcm_loglik(m, data) - 0.5 * d * std::log(static_cast<double>(data.n()));
}

SelectResult select_k(const FeatureData& data, int restarts, std::uint64_t seed) {
    check_nonempty(data);
    check_binary(data.rows);
    Collapsed c = collapse(data.rows);
    const double log_n = std::log(static_cast<double>(data.n()));

    SelectResult out;
    double best_bic = -std::numeric_limits<double>::infinity();
    constexpr int kMax = 20;
    for (int k = 2; k <= kMax; ++k) {
        Fit fit = em_best(c, k, restarts, derive_seed(seed, static_cast<std::uint64_t>(k)));
        const double d = (k - 1) + static_cast<double>(data.f()) * k;
        const double score = fit.loglik - 0.5 * d * log_n;
        out.trace.push_back({k, fit.loglik, score});
        if (score > best_bic) {  // ties keep the smaller k
            best_bic = score;
            out.model.k = k;
            out.model.prior = std::move(fit.prior);
            out.model.cond = std::move(fit.cond);
            out.loglik = fit.loglik;
            out.bic = score;
        }
        if (out.trace.size() >= 2 && score < out.trace[out.trace.size() - 2].bic) break;
    }
    out.model.feature_origin = data.feature_origin;
    return out;
}

}  // namespace specround
