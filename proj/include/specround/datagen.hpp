#pragma once

#include "specround/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace specround {

enum class ShapeKind { gaussian_blob, ring, crescent };

/// One cluster of synthetic points. For blobs, scale is the isotropic
/// standard deviation; for rings and crescents it is the radius, with
/// the angle drawn uniformly from [arc_start, arc_start + arc_span)
/// (rings use the full circle regardless). noise_sd adds isotropic
/// Gaussian jitter on top of the shape.
struct ShapeSpec {
    ShapeKind kind = ShapeKind::gaussian_blob;
    double cx = 0.0;
    double cy = 0.0;
    double scale = 1.0;
    double arc_start = 0.0;      // radians
    double arc_span = 3.141592653589793;
    int count = 100;
    double noise_sd = 0.0;
};

/// Samples every shape in order from one seeded stream and labels each
/// point by its shape index. Deterministic given (specs, seed); the
/// jitter draws happen even at noise_sd = 0, so datasets differing only
/// in noise_sd share base geometry.
DataSet generate(const std::vector<ShapeSpec>& specs, std::uint64_t seed);

/// One dataset per noise level: level i regenerates the base specs with
/// noise_sd raised by levels[i], reusing the same seed so the draws
/// match across levels. Levels must be ascending; level 0 reproduces
/// generate(base) exactly.
std::vector<DataSet> noise_ladder(const std::vector<ShapeSpec>& base,
                                  const std::vector<double>& levels,
                                  std::uint64_t seed);

/// Shape lists for the named presets "ideal-a", "ideal-b", "ideal-c".
std::vector<ShapeSpec> preset_shapes(const std::string& name);

/// The 8 noise offsets behind the "noisy:<level>" presets.
const std::vector<double>& noise_ladder_levels();

/// Dataset for a preset name: "ideal-a", "ideal-b", "ideal-c" or
/// "noisy:<level>" with level in 1..8 (ideal-b shapes plus ladder noise).
DataSet preset_dataset(const std::string& name, std::uint64_t seed);

}  // namespace specround
