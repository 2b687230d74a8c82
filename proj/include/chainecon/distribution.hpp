// Copyright (c) 2026 The chainecon developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace chainecon {

//! Point-in-time holdings. Holders are opaque labels; zero balances are
//! legal entries and shift the Lorenz curve right rather than being dropped.
struct BalanceSnapshot {
    struct Entry {
        std::string holder;
        double balance = 0.0; //!< BTC, >= 0
    };
    std::vector<Entry> entries;
    std::string label;

    void validate() const
    {
        if (entries.empty()) throw std::domain_error("snapshot has no entries");
        for (const auto& e : entries) {
            if (!(e.balance >= 0.0) || !std::isfinite(e.balance)) {
                throw std::domain_error("balances must be finite and >= 0");
            }
        }
    }
};

struct LorenzPoint {
    double population_share = 0.0;
    double wealth_share = 0.0;
};

//! Cumulative wealth share of the poorest fraction of holders. Starts at
//! (0,0), ends at (1,1), convex, never above the diagonal.
struct LorenzCurve {
    std::vector<LorenzPoint> points;
};

namespace detail {

inline std::vector<double> sorted_balances(const BalanceSnapshot& snapshot)
{
    snapshot.validate();
    std::vector<double> balances;
    balances.reserve(snapshot.entries.size());
    for (const auto& e : snapshot.entries) balances.push_back(e.balance);
    std::sort(balances.begin(), balances.end());
    double total = 0.0;
    for (const double b : balances) total += b;
    if (!(total > 0.0)) throw std::domain_error("snapshot total balance must be > 0");
    return balances;
}

} // namespace detail

inline LorenzCurve lorenz_curve(const BalanceSnapshot& snapshot)
{
    const auto balances = detail::sorted_balances(snapshot);
    const auto n = balances.size();
    double total = 0.0;
    for (const double b : balances) total += b;

    LorenzCurve curve;
    curve.points.reserve(n + 1);
    curve.points.push_back({0.0, 0.0});
    double cumulative = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cumulative += balances[i];
        curve.points.push_back({static_cast<double>(i + 1) / static_cast<double>(n),
                                cumulative / total});
    }
    return curve;
}

//! Gini coefficient by the sorted-rank formula
//!   G = sum_i (2i - n - 1) x_(i) / (n^2 * mean),
//! equal to the pairwise mean-absolute-difference form and to
//! 1 - 2 * area under the Lorenz curve. 0 for a uniform snapshot; the
//! finite-sample maximum is (n-1)/n when one holder owns everything.
inline double gini(const BalanceSnapshot& snapshot)
{
    const auto balances = detail::sorted_balances(snapshot);
    const auto n = static_cast<double>(balances.size());
    double total = 0.0;
    double weighted = 0.0;
    for (std::size_t i = 0; i < balances.size(); ++i) {
        total += balances[i];
        weighted += (2.0 * static_cast<double>(i + 1) - n - 1.0) * balances[i];
    }
    return weighted / (n * total);
}

} // namespace chainecon
