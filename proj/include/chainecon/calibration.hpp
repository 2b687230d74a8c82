// Copyright (c) 2026 The chainecon developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <chainecon/supply.hpp>

namespace chainecon {

//! Daily chain-wide aggregates the benchmark parameters are fitted to.
//! Defaults are the 2015 Bitcoin averages; tx_per_day carries the extra
//! digits implied by its per-block counterpart (848.1232877 * 144).
struct CalibrationInputs {
    double tx_per_day = 122129.7534288;
    double volume_per_day = 254843.1781; //!< BTC transacted per day
    double fees_per_day = 22.45900183;   //!< BTC paid in fees per day
    double supply = 14342502.95;         //!< average BTC in circulation
    std::int64_t blocks_per_day = 144;
    double annual_discount = 0.97;
    double reward_per_block = 25.0;

    void validate() const
    {
        auto positive = [](double v, const char* name) {
            if (!(v > 0.0) || !std::isfinite(v)) {
                throw std::domain_error(std::string(name) + " must be > 0");
            }
        };
        positive(tx_per_day, "tx_per_day");
        positive(volume_per_day, "volume_per_day");
        positive(fees_per_day, "fees_per_day");
        positive(supply, "supply");
        positive(annual_discount, "annual_discount");
        positive(reward_per_block, "reward_per_block");
        if (blocks_per_day <= 0) throw std::domain_error("blocks_per_day must be > 0");
        if (annual_discount >= 1.0) throw std::domain_error("annual_discount must be < 1");
    }
};

//! The fitted benchmark parameters plus the per-block aggregates they came
//! from. beta discounts a day, delta a block: delta = beta^(1/(1+N)) with N
//! the confirmation lag in blocks.
struct CalibratedParams {
    double beta = 0.0;         //!< daily discount factor
    double delta = 0.0;        //!< per-block discount factor
    double mu = 1.0;           //!< daily money growth factor
    double tau = 0.0;          //!< fees as a fraction of volume
    double capacity = 0.0;     //!< B, max number of average-sized transactions
    double sigma = 0.0;        //!< velocity, fraction of the stock spent per day
    double alpha = 1.0;        //!< normalization
    double avg_tx_size = 0.0;  //!< BTC per transaction
    int confirmation_lag = 0;  //!< N, blocks waited before a payment is final
    double tx_per_block = 0.0;
    double volume_per_block = 0.0;
    double fees_per_block = 0.0;
};

inline double per_block(double daily_value, std::int64_t blocks_per_day)
{
    if (blocks_per_day <= 0) throw std::domain_error("blocks_per_day must be > 0");
    return daily_value / static_cast<double>(blocks_per_day);
}

inline double fee_rate(double fees_per_block, double volume_per_block)
{
    if (!(volume_per_block > 0.0)) throw std::domain_error("volume must be > 0");
    return fees_per_block / volume_per_block;
}

inline double avg_transaction_size(double volume_per_block, double tx_per_block)
{
    if (!(tx_per_block > 0.0)) throw std::domain_error("transaction count must be > 0");
    return volume_per_block / tx_per_block;
}

inline double velocity(double volume_per_day, double supply)
{
    if (!(supply > 0.0)) throw std::domain_error("supply must be > 0");
    return volume_per_day / supply;
}

//! Maximum number of average-sized transactions the stock supports. Kept
//! fractional; callers wanting a whole count can floor it.
inline double capacity(double supply, double avg_tx_size)
{
    if (!(avg_tx_size > 0.0)) throw std::domain_error("avg_tx_size must be > 0");
    return supply / avg_tx_size;
}

inline double daily_discount(double annual_discount)
{
    if (!(annual_discount > 0.0 && annual_discount < 1.0)) {
        throw std::domain_error("annual_discount must be in (0, 1)");
    }
    return std::pow(annual_discount, 1.0 / 365.0);
}

inline double per_block_discount(double beta, int confirmation_lag)
{
    if (!(beta > 0.0 && beta < 1.0)) throw std::domain_error("beta must be in (0, 1)");
    if (confirmation_lag < 0) throw std::domain_error("confirmation_lag must be >= 0");
    return std::pow(beta, 1.0 / (1.0 + confirmation_lag));
}

//! Invert delta = beta^(1/(1+N)) for the integer lag N.
inline int implied_confirmation_lag(double beta, double delta)
{
    if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("delta must be in (0, 1)");
    if (!(beta > 0.0 && beta < delta)) {
        throw std::domain_error("beta must satisfy 0 < beta < delta");
    }
    return static_cast<int>(std::llround(std::log(beta) / std::log(delta))) - 1;
}

//! Buyer utility U(x) = log(x + b) - log(b). Anchored so U(0) = 0; strictly
//! increasing and concave. b must be positive: at b = 0 the anchor term
//! diverges.
inline double buyer_utility(double x, double b)
{
    if (!(b > 0.0)) throw std::domain_error("utility parameter b must be > 0");
    if (!(x >= 0.0)) throw std::domain_error("consumption x must be >= 0");
    return std::log1p(x / b);
}

//! Empirical distribution of transaction sizes, used as the preference-shock
//! distribution. A step CDF over the sorted unique sizes.
class ShockDistribution
{
public:
    struct Point {
        double size = 0.0;
        double cumulative = 0.0;
    };

    explicit ShockDistribution(std::vector<Point> points) : points_(std::move(points)) {}

    std::span<const Point> points() const { return points_; }

    //! Fraction of mass at sizes <= x.
    double cdf(double x) const
    {
        auto it = std::upper_bound(points_.begin(), points_.end(), x,
                                   [](double v, const Point& pt) { return v < pt.size; });
        if (it == points_.begin()) return 0.0;
        return std::prev(it)->cumulative;
    }

    //! Smallest size whose CDF reaches u.
    double quantile(double u) const
    {
        if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("quantile level must be in [0, 1]");
        auto it = std::lower_bound(points_.begin(), points_.end(), u,
                                   [](const Point& pt, double v) { return pt.cumulative < v; });
        if (it == points_.end()) it = std::prev(points_.end());
        return it->size;
    }

private:
    std::vector<Point> points_;
};

inline ShockDistribution empirical_cdf(std::span<const double> samples)
{
    if (samples.empty()) throw std::domain_error("empirical_cdf needs at least one sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    for (const double s : sorted) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw std::domain_error("transaction sizes must be positive and finite");
        }
    }
    std::sort(sorted.begin(), sorted.end());
    std::vector<ShockDistribution::Point> points;
    const auto n = sorted.size();
    std::size_t i = 0;
    std::size_t seen = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && sorted[j] == sorted[i]) ++j;
        seen += j - i;
        points.push_back({sorted[i], static_cast<double>(seen) / static_cast<double>(n)});
        i = j;
    }
    return ShockDistribution(std::move(points));
}

//! Fit the full parameter set from daily aggregates. The confirmation lag is
//! one day of blocks minus one, the unique integer consistent with the
//! benchmark (beta, delta) pair.
inline CalibratedParams calibrate(const CalibrationInputs& in)
{
    in.validate();
    CalibratedParams params;
    params.tx_per_block = per_block(in.tx_per_day, in.blocks_per_day);
    params.volume_per_block = per_block(in.volume_per_day, in.blocks_per_day);
    params.fees_per_block = per_block(in.fees_per_day, in.blocks_per_day);
    params.beta = daily_discount(in.annual_discount);
    params.confirmation_lag = static_cast<int>(in.blocks_per_day) - 1;
    params.delta = per_block_discount(params.beta, params.confirmation_lag);
    params.mu = money_growth_rate(in.reward_per_block, in.supply, in.blocks_per_day);
    params.tau = fee_rate(params.fees_per_block, params.volume_per_block);
    params.avg_tx_size = avg_transaction_size(params.volume_per_block, params.tx_per_block);
    params.sigma = velocity(in.volume_per_day, in.supply);
    params.capacity = capacity(in.supply, params.avg_tx_size);
    params.alpha = 1.0;
    return params;
}

} // namespace chainecon
