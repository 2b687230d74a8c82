// Copyright (c) 2026 The chainecon developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <chainecon/amount.hpp>

namespace chainecon {

//! Block subsidy schedule: the reward halves every halving_interval blocks
//! until it underflows one base unit, bounding issuance at max_supply.
struct SupplySchedule {
    Amount initial_reward = 50 * COIN;
    std::int64_t halving_interval = 210'000;
    Amount max_supply = 21'000'000 * COIN;
    std::int64_t blocks_per_day = 144; // one block per 10 minutes

    void validate() const
    {
        if (initial_reward <= 0) throw std::domain_error("initial_reward must be > 0");
        if (halving_interval <= 0) throw std::domain_error("halving_interval must be > 0");
        if (max_supply <= 0) throw std::domain_error("max_supply must be > 0");
        if (blocks_per_day <= 0) throw std::domain_error("blocks_per_day must be > 0");
    }
};

//! Subsidy for the block at `height`, in base units. Halving floors at the
//! base unit, so the reward reaches exactly zero once shifted out.
inline Amount block_reward_sat(const SupplySchedule& schedule, std::int64_t height)
{
    schedule.validate();
    if (height < 0) throw std::domain_error("height must be >= 0");
    const std::int64_t halvings = height / schedule.halving_interval;
    if (halvings >= 63) return 0;
    return schedule.initial_reward >> halvings;
}

inline double block_reward(const SupplySchedule& schedule, std::int64_t height)
{
    return btc_from_sat(block_reward_sat(schedule, height));
}

//! Total issuance of blocks 0..height-1 via the per-era geometric sum,
//! clamped at max_supply. Exact in base units.
inline Amount cumulative_supply_sat(const SupplySchedule& schedule, std::int64_t height)
{
    schedule.validate();
    if (height < 0) throw std::domain_error("height must be >= 0");
    Amount total = 0;
    for (std::int64_t era = 0;; ++era) {
        const std::int64_t era_start = era * schedule.halving_interval;
        if (era_start >= height) break;
        const Amount reward = era >= 63 ? 0 : (schedule.initial_reward >> era);
        if (reward == 0) break;
        const std::int64_t count = std::min<std::int64_t>(schedule.halving_interval, height - era_start);
        if (count > (schedule.max_supply - total) / reward) {
            return schedule.max_supply; // issuing this era would cross the cap
        }
        total += reward * count;
    }
    return total;
}

inline double cumulative_supply(const SupplySchedule& schedule, std::int64_t height)
{
    return btc_from_sat(cumulative_supply_sat(schedule, height));
}

//! Daily multiplicative growth of the monetary stock:
//! (1 + reward/supply)^blocks_per_day, amounts in decimal BTC.
inline double money_growth_rate(double reward, double supply, std::int64_t blocks_per_day)
{
    if (!(supply > 0.0)) throw std::domain_error("supply must be > 0");
    if (!(reward >= 0.0)) throw std::domain_error("reward must be >= 0");
    if (blocks_per_day <= 0) throw std::domain_error("blocks_per_day must be > 0");
    return std::pow(1.0 + reward / supply, static_cast<double>(blocks_per_day));
}

//! Annual inflation implied by a daily growth factor, 365-day convention.
inline double annualized_inflation(double mu_daily)
{
    if (!(mu_daily > 0.0)) throw std::domain_error("mu_daily must be > 0");
    return std::pow(mu_daily, 365.0) - 1.0;
}

//! Monetary state as of a block height: circulating stock, the next block's
//! reward, and the growth/inflation rates they imply.
struct MonetarySnapshot {
    double supply = 0.0;
    double reward = 0.0;
    double mu_daily = 1.0;
    double annual_inflation = 0.0;
};

inline MonetarySnapshot monetary_snapshot(const SupplySchedule& schedule, std::int64_t height)
{
    MonetarySnapshot snap;
    snap.supply = cumulative_supply(schedule, height);
    snap.reward = block_reward(schedule, height);
    if (!(snap.supply > 0.0)) {
        throw std::domain_error("no circulating supply at this height; growth rate undefined");
    }
    snap.mu_daily = money_growth_rate(snap.reward, snap.supply, schedule.blocks_per_day);
    snap.annual_inflation = annualized_inflation(snap.mu_daily);
    return snap;
}

} // namespace chainecon
