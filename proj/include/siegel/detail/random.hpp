#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace siegel::detail {

// Deterministic helpers on top of mt19937_64. The raw engine output is
// specified by the standard; std::uniform_real_distribution and
// std::normal_distribution are not, so map the bits ourselves to keep
// seeded runs byte-identical across platforms.

inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53; // [0, 1)
}

inline double uniform_pm1(std::mt19937_64& gen) {
    return 2.0 * uniform01(gen) - 1.0; // [-1, 1)
}

// Box-Muller, no cached spare so consumption per call is fixed.
inline double gaussian(std::mt19937_64& gen) {
    double u1 = uniform01(gen);
    double u2 = uniform01(gen);
    while (u1 <= 0.0) u1 = uniform01(gen);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

// Random point on the unit sphere in R^n (normalized Gaussian vector).
inline std::vector<double> random_unit_vector(std::mt19937_64& gen, int n) {
    std::vector<double> v(n);
    double norm_sq = 0.0;
    do {
        norm_sq = 0.0;
        for (int i = 0; i < n; ++i) {
            v[i] = gaussian(gen);
            norm_sq += v[i] * v[i];
        }
    } while (norm_sq < 1e-12);
    double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& x : v) x *= inv;
    return v;
}

} // namespace siegel::detail
