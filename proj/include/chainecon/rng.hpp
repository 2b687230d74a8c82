// Copyright (c) 2026 The chainecon developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cmath>
#include <cstdint>

namespace chainecon {

//! SplitMix64 (Steele, Lea & Flood 2014). Chosen over <random> engines
//! because its output is fully specified, so seeded runs reproduce
//! bit-identically across platforms and standard-library versions.
class SplitMix64
{
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t x = (state_ += 0x9E3779B97F4A7C15ULL);
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    //! Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

//! Deterministic sub-seed for an independent stream. Mixing the stream index
//! through the generator keeps streams decorrelated while leaving the
//! partition of work independent of thread count.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream)
{
    SplitMix64 mixer(master_seed ^ (0xA0761D6478BD642FULL + stream * 0xE7037ED1A0B428DBULL));
    mixer.next();
    return mixer.next();
}

//! Poisson sample. Inversion by sequential search below the threshold;
//! above it, counts unit-exponential gaps until they exceed lambda (the
//! arrival-process view), which never needs e^-lambda itself.
inline int sample_poisson(SplitMix64& rng, double lambda)
{
    if (lambda <= 0.0) return 0;
    if (lambda < 30.0) {
        const double u = rng.uniform01();
        double term = std::exp(-lambda);
        double cumulative = term;
        int k = 0;
        // The cumulative sum saturates just below 1 in floating point; the
        // bound covers the astronomically unlikely draw above it.
        while (u > cumulative && k < 1000) {
            ++k;
            term *= lambda / k;
            cumulative += term;
        }
        return k;
    }
    int k = 0;
    double elapsed = -std::log1p(-rng.uniform01());
    while (elapsed < lambda) {
        ++k;
        elapsed += -std::log1p(-rng.uniform01());
    }
    return k;
}

} // namespace chainecon
