// Copyright (c) 2026 The chainecon developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace chainecon {

//! Currency amount in base units (satoshis). All supply accounting is done in
//! integer base units; the decimal-BTC views are conversions at the surface.
using Amount = std::int64_t;

//! Base units per bitcoin.
inline constexpr Amount COIN = 100'000'000;

inline constexpr double btc_from_sat(Amount sat)
{
    return static_cast<double>(sat) / static_cast<double>(COIN);
}

inline Amount sat_from_btc(double btc)
{
    if (!std::isfinite(btc)) {
        throw std::domain_error("amount must be finite");
    }
    const double scaled = btc * static_cast<double>(COIN);
    if (scaled < -9.2e18 || scaled > 9.2e18) {
        throw std::domain_error("amount out of range");
    }
    return static_cast<Amount>(std::llround(scaled));
}

} // namespace chainecon
