#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace specround {

/// splitmix64 step; used to decorrelate derived seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic child seed for an independent stream (restart index,
/// loop index, ...). Mixing keeps adjacent indices uncorrelated.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t s = base ^ (0x632be59bd9b4e019ULL * (index + 1));
    return splitmix64(s);
}

/// Uniform double in [0, 1) from the top 53 bits; identical on every
/// platform, unlike std::uniform_real_distribution.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller; always exactly two draws, so streams
/// stay aligned across runs that vary only scale parameters.
inline double normal_unit(std::mt19937_64& rng) {
    double u1 = uniform_unit(rng);
    double u2 = uniform_unit(rng);
    if (u1 <= 0.0) u1 = 0x1.0p-53;  // keep log finite without redrawing
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace specround
