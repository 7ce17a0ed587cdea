#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "svdkit/errors.hpp"
#include "svdkit/schmidt.hpp"
#include "svdkit/tensor.hpp"

namespace svdkit {

// SplitMix64 (Steele / Lea / Vigna). Fixed constants, no platform-dependent
// state; the golden vectors committed in the tests pin the stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1) with 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Box-Muller pair of standard normal deviates. The radius draw lands in
    // (0, 1] so the logarithm stays finite.
    std::pair<double, double> gaussian_pair() {
        const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(theta), r * std::sin(theta)};
    }

private:
    std::uint64_t state_;
};

// Normalized random tensor: amplitudes drawn as (g1 + i*g2) from consecutive
// Box-Muller pairs in row-major order, then divided by the Euclidean norm.
// Identical seeds reproduce identical amplitudes.
inline DenseTensor random_state(std::vector<std::size_t> dims, std::uint64_t seed) {
    if (dims.empty()) {
        throw InvalidInput("random_state: dims must be non-empty");
    }
    DenseTensor t(std::move(dims));
    SplitMix64 rng(seed);
    double norm2 = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        const auto [re, im] = rng.gaussian_pair();
        t[k] = ComplexScalar(re, im);
        norm2 += std::norm(t[k]);
    }
    if (norm2 == 0.0) {
        throw InvalidInput("random_state: degenerate draw");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t k = 0; k < t.size(); ++k) {
        t[k] *= inv;
    }
    return t;
}

// Bipartite view of a random state on d_A x d_B.
inline StateVector random_bipartite_state(std::size_t dim_a, std::size_t dim_b,
                                          std::uint64_t seed) {
    DenseTensor t = random_state({dim_a, dim_b}, seed);
    return StateVector(dim_a, dim_b, std::move(t.data()));
}

} // namespace svdkit
