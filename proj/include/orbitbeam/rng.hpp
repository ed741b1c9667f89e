// Copyright (c) 2026 The Orbitbeam Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

#include "orbitbeam/errors.hpp"

namespace orbitbeam {

// Self-contained random stream with fixed algorithms so that results are
// reproducible across platforms and standard-library versions. Core generator
// is xoshiro256++ seeded through SplitMix64; distribution samplers are exact
// (no normal approximations) and draw a deterministic sequence of variates.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : state_) w = splitmix64(x);
    }

    /// Stream for an independent work item (trial, sweep point) derived from
    /// a master seed. Streams with distinct indices do not collide.
    static RandomStream substream(std::uint64_t master_seed, std::uint64_t index) {
        std::uint64_t x = master_seed;
        std::uint64_t a = splitmix64(x);
        x = index + 0x9E3779B97F4A7C15ULL;
        std::uint64_t b = splitmix64(x);
        return RandomStream(a ^ (b + 0x2545F4914F6CDD1DULL));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller (one variate per call, two uniforms).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(6.283185307179586477 * u2);
    }

    /// Exponential with unit mean.
    double exponential() { return -std::log1p(-uniform()); }

    /// Gamma(shape, scale) via Marsaglia-Tsang, with the power boost for shape < 1.
    double gamma(double shape, double scale) {
        if (!(shape > 0.0) || !(scale >= 0.0))
            throw ArgumentError("gamma: shape must be > 0 and scale >= 0");
        if (scale == 0.0) return 0.0;
        if (shape < 1.0) {
            double u = uniform();
            while (u == 0.0) u = uniform();
            return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
                return scale * d * v;
        }
    }

    /// Poisson(mean): product inversion below 10, Hormann PTRS above.
    std::uint64_t poisson(double mean) {
        if (!(mean >= 0.0)) throw ArgumentError("poisson: mean must be >= 0");
        if (mean == 0.0) return 0;
        if (mean < 10.0) {
            const double limit = std::exp(-mean);
            std::uint64_t k = 0;
            double prod = uniform();
            while (prod > limit) {
                ++k;
                prod *= uniform();
            }
            return k;
        }
        return poisson_ptrs(mean);
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    // Transformed rejection with squeeze (Hormann 1993), exact for mean >= 10.
    std::uint64_t poisson_ptrs(double mean) {
        const double slam = std::sqrt(mean);
        const double llam = std::log(mean);
        const double b = 0.931 + 2.53 * slam;
        const double a = -0.059 + 0.02483 * b;
        const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        const double vr = 0.9277 - 3.6224 / (b - 2.0);
        for (;;) {
            double u = uniform() - 0.5;
            double v = uniform();
            double us = 0.5 - std::fabs(u);
            double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
            if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(kf);
            if (kf < 0.0 || (us < 0.013 && v > us)) continue;
            if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
                kf * llam - mean - std::lgamma(kf + 1.0))
                return static_cast<std::uint64_t>(kf);
        }
    }

    std::uint64_t state_[4];
};

}  // namespace orbitbeam
