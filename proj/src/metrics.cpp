#include "specround/metrics.hpp"

#include "specround/error.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace specround {

namespace {

std::vector<std::int64_t> contingency(const Partition& p, const Partition& t) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(p.k) * static_cast<std::size_t>(t.k), 0);
    for (int i = 0; i < p.n(); ++i) {
        const auto a = static_cast<std::size_t>(p.assignment[static_cast<std::size_t>(i)]);
        const auto b = static_cast<std::size_t>(t.assignment[static_cast<std::size_t>(i)]);
        ++counts[a * static_cast<std::size_t>(t.k) + b];
    }
    return counts;
}

void require_same_n(const Partition& p, const Partition& t) {
    if (p.n() != t.n())
        fail(ErrorCode::length_mismatch, "partitions cover different point counts");
}

double pairs2(std::int64_t m) { return 0.5 * static_cast<double>(m) * static_cast<double>(m - 1); }

}  // namespace

double rand_index(const Partition& p, const Partition& t) {
    require_same_n(p, t);
    const std::int64_t n = p.n();
    if (n < 2) fail(ErrorCode::invalid_argument, "rand index requires n >= 2");

    const auto joint = contingency(p, t);
    double together_both = 0.0;
    for (auto c : joint) together_both += pairs2(c);
    double together_p = 0.0;
    for (auto c : p.cell_sizes()) together_p += pairs2(c);
    double together_t = 0.0;
    for (auto c : t.cell_sizes()) together_t += pairs2(c);

    const double total = pairs2(n);
    const double apart_both = total - together_p - together_t + together_both;
    return (together_both + apart_both) / total;
}

double variation_of_information(const Partition& p, const Partition& t) {
    require_same_n(p, t);
    const double n = static_cast<double>(p.n());
    if (p.n() == 0) fail(ErrorCode::invalid_argument, "variation of information requires n >= 1");

    auto entropy_term = [n](std::int64_t c) {
        const double f = c / n;
        return -f * std::log(f);
    };

    // H(p|t) + H(t|p) = 2 H(joint) - H(p) - H(t). All three entropies sum
    // the same kind of terms from one contingency table, so identical
    // partitions (a one-to-one table) cancel to exactly 0.0.
    const auto joint = contingency(p, t);
    double h_joint = 0.0;
    for (auto c : joint)
        if (c > 0) h_joint += entropy_term(c);
    double h_p = 0.0;
    for (auto c : p.cell_sizes())
        if (c > 0) h_p += entropy_term(c);
    double h_t = 0.0;
    for (auto c : t.cell_sizes())
        if (c > 0) h_t += entropy_term(c);

    const double vi = 2.0 * h_joint - h_p - h_t;
    return vi < 0.0 ? 0.0 : vi;  // clip tiny negatives from cancellation
}

MetricReport evaluate_partition(const Partition& predicted, const Partition& truth) {
    MetricReport r;
    r.rand_index = rand_index(predicted, truth);
    r.vi = variation_of_information(predicted, truth);
    r.k_found = predicted.k;
    r.k_true = truth.k;
    return r;
}

}  // namespace specround
