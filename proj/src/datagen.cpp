#include "specround/datagen.hpp"

#include "specround/error.hpp"
#include "specround/rng.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace specround {

namespace {

constexpr double kTwoPi = 6.283185307179586;

void validate(const std::vector<ShapeSpec>& specs) {
    if (specs.empty()) fail(ErrorCode::empty_data, "no shapes to sample");
    for (const ShapeSpec& s : specs) {
        if (s.count < 1) fail(ErrorCode::invalid_argument, "shape count must be >= 1");
        if (s.scale < 0.0 || !std::isfinite(s.scale))
            fail(ErrorCode::invalid_argument, "shape scale must be >= 0 and finite");
        if (s.noise_sd < 0.0 || !std::isfinite(s.noise_sd))
            fail(ErrorCode::invalid_argument, "noise_sd must be >= 0 and finite");
        if (!std::isfinite(s.cx) || !std::isfinite(s.cy) ||
            !std::isfinite(s.arc_start) || !std::isfinite(s.arc_span))
            fail(ErrorCode::nonfinite_input, "shape parameters must be finite");
        if (s.kind == ShapeKind::crescent && !(s.arc_span > 0.0))
            fail(ErrorCode::invalid_argument, "crescent arc_span must be positive");
    }
}

}  // namespace

DataSet generate(const std::vector<ShapeSpec>& specs, std::uint64_t seed) {
    validate(specs);
    int n = 0;
    for (const ShapeSpec& s : specs) n += s.count;

    Matrix points(n, 2);
    std::vector<std::int32_t> labels(static_cast<std::size_t>(n));
    std::mt19937_64 rng(seed);

    int row = 0;
    for (std::size_t si = 0; si < specs.size(); ++si) {
        const ShapeSpec& s = specs[si];
        for (int i = 0; i < s.count; ++i, ++row) {
            double x = 0.0, y = 0.0;
            switch (s.kind) {
                case ShapeKind::gaussian_blob: {
                    x = s.cx + s.scale * normal_unit(rng);
                    y = s.cy + s.scale * normal_unit(rng);
                    break;
                }
                case ShapeKind::ring: {
                    // Jittered regular grid rather than iid angles: the
                    // largest gap of an iid sample grows like ln(count)
                    // spacings and disconnects sparse k-NN graphs, while
                    // jittered slots bound the gap at 1.7 spacings.
                    double slot = (i + 0.7 * (uniform_unit(rng) - 0.5)) / s.count;
                    double theta = kTwoPi * slot;
                    x = s.cx + s.scale * std::cos(theta);
                    y = s.cy + s.scale * std::sin(theta);
                    break;
                }
                case ShapeKind::crescent: {
                    double theta = s.arc_start + s.arc_span * uniform_unit(rng);
                    x = s.cx + s.scale * std::cos(theta);
                    y = s.cy + s.scale * std::sin(theta);
                    break;
                }
            }
            // Jitter draws happen unconditionally so that the stream stays
            // aligned when only noise_sd differs between runs.
            double jx = normal_unit(rng);
            double jy = normal_unit(rng);
            points(row, 0) = x + s.noise_sd * jx;
            points(row, 1) = y + s.noise_sd * jy;
            labels[static_cast<std::size_t>(row)] = static_cast<std::int32_t>(si);
        }
    }
    return DataSet::create(std::move(points), std::move(labels));
}

std::vector<DataSet> noise_ladder(const std::vector<ShapeSpec>& base,
                                  const std::vector<double>& levels,
                                  std::uint64_t seed) {
    if (levels.empty()) fail(ErrorCode::empty_data, "noise ladder needs at least one level");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] < 0.0 || !std::isfinite(levels[i]))
            fail(ErrorCode::invalid_argument, "noise levels must be >= 0 and finite");
        if (i > 0 && levels[i] < levels[i - 1])
            fail(ErrorCode::invalid_argument, "noise levels must be ascending");
    }
    std::vector<DataSet> out;
    out.reserve(levels.size());
    for (double level : levels) {
        std::vector<ShapeSpec> specs = base;
        for (ShapeSpec& s : specs) s.noise_sd += level;
        out.push_back(generate(specs, seed));
    }
    return out;
}

std::vector<ShapeSpec> preset_shapes(const std::string& name) {
    constexpr double kPi = 3.141592653589793;
    if (name == "ideal-a") {
        // Three well-separated blobs; distinct counts keep the graph
        // spectrum simple (equal-sized copies of one shape can produce
        // repeated eigenvalues and mixed eigenvectors).
        return {
            {ShapeKind::gaussian_blob, -1.5, 0.0, 0.15, 0.0, 0.0, 100, 0.0},
            {ShapeKind::gaussian_blob, 0.0, 1.2, 0.15, 0.0, 0.0, 110, 0.0},
            {ShapeKind::gaussian_blob, 1.5, 0.0, 0.15, 0.0, 0.0, 90, 0.0},
        };
    }
    if (name == "ideal-b") {
        // Two opposing crescent arcs around three aligned blobs; five
        // clusters.  Arcs are kept short and blobs well apart so that
        // under a dense Gaussian graph every between-cluster mode has a
        // smaller eigenvalue than any within-cluster mode.
        return {
            {ShapeKind::crescent, 0.0, 0.0, 1.5, kPi / 8.0, kPi / 2.0, 120, 0.01},
            {ShapeKind::crescent, 0.0, 0.0, 1.5, kPi + kPi / 8.0, kPi / 2.0, 110, 0.01},
            {ShapeKind::gaussian_blob, -0.85, 0.0, 0.05, 0.0, 0.0, 80, 0.0},
            {ShapeKind::gaussian_blob, 0.0, 0.0, 0.05, 0.0, 0.0, 70, 0.0},
            {ShapeKind::gaussian_blob, 0.85, 0.0, 0.05, 0.0, 0.0, 80, 0.0},
        };
    }
    if (name == "ideal-c") {
        // Four concentric rings; meant for a sparse (3-NN) graph.  Rings
        // stay connected at k=3 thanks to the jittered-grid sampling; a
        // Gaussian core would occasionally shed an isolated tail clique.
        return {
            {ShapeKind::ring, 0.0, 0.0, 1.0, 0.0, 0.0, 170, 0.008},
            {ShapeKind::ring, 0.0, 0.0, 0.75, 0.0, 0.0, 130, 0.008},
            {ShapeKind::ring, 0.0, 0.0, 0.5, 0.0, 0.0, 90, 0.008},
            {ShapeKind::ring, 0.0, 0.0, 0.25, 0.0, 0.0, 60, 0.008},
        };
    }
    fail(ErrorCode::invalid_argument, "unknown shape preset: " + name);
}

const std::vector<double>& noise_ladder_levels() {
    static const std::vector<double> levels = {0.01, 0.02, 0.04, 0.08,
                                               0.12, 0.17, 0.24, 0.30};
    return levels;
}

DataSet preset_dataset(const std::string& name, std::uint64_t seed) {
    if (name.rfind("noisy:", 0) == 0) {
        const std::string tail = name.substr(6);
        int level = 0;
        try {
            std::size_t used = 0;
            level = std::stoi(tail, &used);
            if (used != tail.size()) level = 0;
        } catch (const std::exception&) {
            level = 0;
        }
        const auto& levels = noise_ladder_levels();
        if (level < 1 || static_cast<std::size_t>(level) > levels.size())
            fail(ErrorCode::invalid_argument,
                 "noisy:<level> expects level in 1.." + std::to_string(levels.size()));
        std::vector<ShapeSpec> specs = preset_shapes("ideal-b");
        for (ShapeSpec& s : specs) s.noise_sd += levels[static_cast<std::size_t>(level - 1)];
        return generate(specs, seed);
    }
    return generate(preset_shapes(name), seed);
}

}  // namespace specround
