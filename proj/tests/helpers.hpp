#pragma once

#include "specround/binarize.hpp"
#include "specround/datagen.hpp"
#include "specround/graph.hpp"
#include "specround/spectra.hpp"
#include "specround/types.hpp"

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace testutil {

inline specround::Partition part(std::initializer_list<std::int32_t> labels) {
    std::vector<std::int32_t> v(labels);
    return specround::Partition::from_labels(v);
}

inline specround::Partition part(const std::vector<std::int32_t>& labels) {
    return specround::Partition::from_labels(labels);
}

/// Pair-counting Rand index, quadratic on purpose: an oracle independent
/// of the library's contingency-table implementation.
inline double brute_rand_index(const specround::Partition& p, const specround::Partition& t) {
    const int n = p.n();
    long agree = 0, total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool same_p = p.assignment[i] == p.assignment[j];
            const bool same_t = t.assignment[i] == t.assignment[j];
            agree += (same_p == same_t);
            ++total;
        }
    return total == 0 ? 1.0 : static_cast<double>(agree) / static_cast<double>(total);
}

/// Entropy/mutual-information VI oracle, written in the H(p)+H(t)-2I form
/// so it shares no code path with the library's joint-entropy form.
inline double brute_vi(const specround::Partition& p, const specround::Partition& t) {
    const int n = p.n();
    std::map<std::int32_t, int> cp, ct;
    std::map<std::pair<std::int32_t, std::int32_t>, int> joint;
    for (int i = 0; i < n; ++i) {
        ++cp[p.assignment[i]];
        ++ct[t.assignment[i]];
        ++joint[{p.assignment[i], t.assignment[i]}];
    }
    auto ent = [n](double c) { return -(c / n) * std::log(c / n); };
    double hp = 0, ht = 0, mi = 0;
    for (auto& [k, c] : cp) hp += ent(c);
    for (auto& [k, c] : ct) ht += ent(c);
    for (auto& [key, c] : joint) {
        const double pj = static_cast<double>(c) / n;
        mi += pj * std::log(pj * n * n / (static_cast<double>(cp[key.first]) * ct[key.second]));
    }
    return hp + ht - 2.0 * mi;
}

inline specround::Partition random_partition(std::mt19937_64& rng, int n, int kmax) {
    std::vector<std::int32_t> labels(static_cast<std::size_t>(n));
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(kmax));
    for (auto& l : labels) l = static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(k));
    return specround::Partition::from_labels(labels);
}

/// True iff `fine` refines `coarse`: points sharing a fine cell always
/// share a coarse cell.
inline bool refines(const specround::Partition& fine, const specround::Partition& coarse) {
    std::map<std::int32_t, std::int32_t> seen;
    for (int i = 0; i < fine.n(); ++i) {
        auto [it, inserted] = seen.emplace(fine.assignment[i], coarse.assignment[i]);
        if (!inserted && it->second != coarse.assignment[i]) return false;
    }
    return true;
}

struct IdealCase {
    specround::DataSet data;
    specround::EigenSystem eigs;
    specround::Partition truth;
};

/// Generates a preset, builds its documented similarity graph, and solves
/// for the K leading eigenpairs.
inline IdealCase ideal_case(const std::string& preset, int knn, int K, std::uint64_t seed) {
    IdealCase out{specround::preset_dataset(preset, seed), {}, {}};
    auto sim = specround::knn_similarity(out.data, knn);
    out.eigs = specround::leading_eigenpairs(specround::laplacian_rw(sim), K);
    out.truth = specround::Partition::from_labels(out.data.labels);
    return out;
}

}  // namespace testutil
