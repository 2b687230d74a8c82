// Copyright (c) 2026 The chainecon developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <chainecon/rng.hpp>

namespace chainecon {

//! How the attacker's head start is modeled in a double-spend trial.
enum class RaceMode {
    POISSON_PROGRESS, //!< head start drawn from Poisson(z*q/p), then the catch-up walk
    BERNOULLI_RACE,   //!< head start from the literal block race the Poisson form approximates
    CATCH_UP_WALK,    //!< bare gambler's-ruin walk from deficit z, no head start
};

inline const char* race_mode_name(RaceMode mode)
{
    switch (mode) {
    case RaceMode::POISSON_PROGRESS: return "poisson";
    case RaceMode::BERNOULLI_RACE: return "bernoulli";
    case RaceMode::CATCH_UP_WALK: return "walk";
    }
    return "?";
}

struct SimConfig {
    double q = 0.1;
    int z = 6;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    RaceMode mode = RaceMode::POISSON_PROGRESS;
    int deficit_cutoff = 0; //!< absorbing-failure deficit; 0 selects the default

    void validate() const
    {
        if (!(q >= 0.0)) throw std::domain_error("attacker hash share q must be >= 0");
        if (q >= 0.5) throw std::domain_error("q must be < 1/2: with q >= 1/2 the walk has no absorbing failure");
        if (z < 0) throw std::domain_error("confirmation depth z must be >= 0");
        if (trials < 1) throw std::domain_error("trials must be >= 1");
        if (deficit_cutoff != 0 && deficit_cutoff < z + 1) {
            throw std::domain_error("deficit_cutoff must be >= z + 1");
        }
    }
};

struct SimResult {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    RaceMode mode = RaceMode::CATCH_UP_WALK;
    std::uint64_t seed = 0;

    bool operator==(const SimResult&) const = default;
};

//! Default absorbing-failure deficit D: deep enough that the abandoned mass
//! (q/p)^D is below 1e-12, and never closer than 30 blocks past z.
inline int default_deficit_cutoff(double q, int z)
{
    int by_mass = 1;
    if (q > 0.0) {
        const double log_ratio = std::log(q / (1.0 - q)); // < 0 for q < 1/2
        by_mass = static_cast<int>(std::ceil(std::log(1e-12) / log_ratio));
    }
    return std::max(z + 30, by_mass);
}

namespace detail {

//! One gambler's-ruin walk. The attacker starts `deficit` net blocks behind;
//! an attacker block (probability q) closes the gap by one, an honest block
//! widens it. Reaching breakeven is success, reaching the cutoff is the
//! absorbing failure.
inline bool run_catch_up_walk(SplitMix64& rng, double q, int deficit, int cutoff)
{
    while (true) {
        if (deficit <= 0) return true;
        if (deficit >= cutoff) return false;
        deficit += (rng.uniform01() < q) ? -1 : +1;
    }
}

inline bool run_trial(SplitMix64& rng, const SimConfig& cfg, double lambda, int cutoff)
{
    switch (cfg.mode) {
    case RaceMode::CATCH_UP_WALK:
        return run_catch_up_walk(rng, cfg.q, cfg.z, cutoff);
    case RaceMode::POISSON_PROGRESS: {
        const int progress = sample_poisson(rng, lambda);
        if (progress >= cfg.z) return true;
        return run_catch_up_walk(rng, cfg.q, cfg.z - progress, cutoff);
    }
    case RaceMode::BERNOULLI_RACE: {
        // Count attacker blocks mined while the honest chain extends by z.
        int honest = 0;
        int attacker = 0;
        while (honest < cfg.z) {
            if (rng.uniform01() < cfg.q) {
                ++attacker;
            } else {
                ++honest;
            }
        }
        if (attacker >= cfg.z) return true;
        return run_catch_up_walk(rng, cfg.q, cfg.z - attacker, cutoff);
    }
    }
    return false;
}

} // namespace detail

//! Trials are split over this fixed number of independent SplitMix64 streams
//! regardless of thread count, so estimates depend only on the config.
inline constexpr unsigned SIM_STREAMS = 64;

//! Run the configured experiment. `workers` caps the number of threads used
//! (0 = hardware concurrency); the result is identical for every value.
inline SimResult simulate_double_spend(const SimConfig& cfg, unsigned workers = 0)
{
    cfg.validate();
    const int cutoff = cfg.deficit_cutoff > 0 ? cfg.deficit_cutoff : default_deficit_cutoff(cfg.q, cfg.z);
    const double lambda = cfg.z * cfg.q / (1.0 - cfg.q);

    std::array<std::uint64_t, SIM_STREAMS> stream_successes{};
    const std::uint64_t base = cfg.trials / SIM_STREAMS;
    const std::uint64_t remainder = cfg.trials % SIM_STREAMS;

    auto run_stream = [&](unsigned s) {
        const std::uint64_t count = base + (s < remainder ? 1 : 0);
        SplitMix64 rng(derive_stream_seed(cfg.seed, s));
        std::uint64_t hits = 0;
        for (std::uint64_t t = 0; t < count; ++t) {
            hits += detail::run_trial(rng, cfg, lambda, cutoff) ? 1 : 0;
        }
        stream_successes[s] = hits;
    };

    unsigned n_workers = workers != 0 ? workers : std::thread::hardware_concurrency();
    n_workers = std::clamp(n_workers, 1u, SIM_STREAMS);
    if (n_workers == 1) {
        for (unsigned s = 0; s < SIM_STREAMS; ++s) run_stream(s);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) {
            pool.emplace_back([&, w] {
                for (unsigned s = w; s < SIM_STREAMS; s += n_workers) run_stream(s);
            });
        }
        for (auto& th : pool) th.join();
    }

    std::uint64_t successes = 0;
    for (const auto hits : stream_successes) successes += hits;

    SimResult result;
    result.successes = successes;
    result.trials = cfg.trials;
    result.estimate = static_cast<double>(successes) / static_cast<double>(cfg.trials);
    result.standard_error = std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(cfg.trials));
    result.mode = cfg.mode;
    result.seed = cfg.seed;
    return result;
}

//! Empirical estimate of the catch-up probability (q/p)^z.
inline SimResult simulate_catch_up(double q, int z, std::uint64_t trials, std::uint64_t seed,
                                   int deficit_cutoff = 0, unsigned workers = 0)
{
    SimConfig cfg;
    cfg.q = q;
    cfg.z = z;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.mode = RaceMode::CATCH_UP_WALK;
    cfg.deficit_cutoff = deficit_cutoff;
    return simulate_double_spend(cfg, workers);
}

} // namespace chainecon
