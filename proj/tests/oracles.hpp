// Copyright (c) 2026 The chainecon developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

// Independent reference computations the library is checked against. These
// deliberately avoid the production code paths: the double-spend series is
// summed term by term from lgamma-based Poisson weights instead of the
// finite rearrangement, supply is added block by block, and Gini comes from
// the pairwise definition and from the Lorenz area.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <chainecon/distribution.hpp>
#include <chainecon/supply.hpp>

namespace oracle {

inline double poisson_pmf(int k, double lambda)
{
    if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
    return std::exp(k * std::log(lambda) - lambda - std::lgamma(k + 1.0));
}

//! The double-spend success series, truncated once the remaining Poisson
//! tail mass drops below `tail`.
inline double double_spend_series(double q, int z, double tail = 1e-15)
{
    const double p = 1.0 - q;
    if (p <= q) return 1.0;
    const double lambda = z * q / p;
    const double ratio = q / p;
    double sum = 0.0;
    double mass = 0.0;
    for (int k = 0; mass < 1.0 - tail; ++k) {
        const double pois = poisson_pmf(k, lambda);
        const double catch_up = k >= z ? 1.0 : std::pow(ratio, z - k);
        sum += pois * catch_up;
        mass += pois;
        if (k > 100000) break;
    }
    return std::min(sum, 1.0);
}

//! P(K > z) for K ~ Poisson(lambda).
inline double poisson_tail_above(int z, double lambda)
{
    double mass = 0.0;
    for (int k = 0; k <= z; ++k) mass += poisson_pmf(k, lambda);
    return 1.0 - mass;
}

//! Scan for the smallest depth with series probability below epsilon.
inline int min_confirmations_scan(double q, double epsilon)
{
    for (int z = 0;; ++z) {
        if (double_spend_series(q, z) < epsilon) return z;
    }
}

//! Block-by-block issuance sum, halving by integer division at each era
//! boundary rather than reusing the library's shift-based reward.
inline chainecon::Amount brute_force_supply_sat(const chainecon::SupplySchedule& schedule, std::int64_t height)
{
    chainecon::Amount total = 0;
    chainecon::Amount reward = schedule.initial_reward;
    for (std::int64_t h = 0; h < height; ++h) {
        if (h > 0 && h % schedule.halving_interval == 0) reward /= 2;
        total += reward;
    }
    return std::min(total, schedule.max_supply);
}

//! Gini from the pairwise mean-absolute-difference definition.
inline double gini_pairwise(const std::vector<double>& balances)
{
    const auto n = balances.size();
    double total = 0.0;
    for (const double b : balances) total += b;
    double abs_diff_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            abs_diff_sum += std::abs(balances[i] - balances[j]);
        }
    }
    return abs_diff_sum / (2.0 * static_cast<double>(n) * total);
}

//! Gini as one minus twice the trapezoidal area under the Lorenz curve.
inline double gini_from_lorenz(const chainecon::LorenzCurve& curve)
{
    double area = 0.0;
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        const auto& a = curve.points[i - 1];
        const auto& b = curve.points[i];
        area += (b.population_share - a.population_share) * (a.wealth_share + b.wealth_share) / 2.0;
    }
    return 1.0 - 2.0 * area;
}

} // namespace oracle
