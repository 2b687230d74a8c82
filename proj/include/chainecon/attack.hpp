// Copyright (c) 2026 The chainecon developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace chainecon {

//! A double-spend attempt: an attacker controlling share q of the hash power
//! races a chain that is z confirmations ahead. The honest share p is always
//! derived as 1 - q, never stored.
struct AttackScenario {
    double q = 0.1; //!< attacker share of hash power, in [0, 1]
    int z = 6;      //!< confirmation depth, >= 0

    double p() const { return 1.0 - q; }

    void validate() const
    {
        if (!(q >= 0.0 && q <= 1.0)) {
            throw std::domain_error("attacker hash share q must be in [0, 1], got " + std::to_string(q));
        }
        if (z < 0) {
            throw std::domain_error("confirmation depth z must be >= 0");
        }
    }
};

//! Double-spend success probability together with the expected attacker
//! progress lambda = z*q/p during the z-block confirmation window.
struct RiskResult {
    double probability = 0.0;
    double lambda = 0.0;
};

//! Probability that the attacker ever erases a deficit of z blocks.
//!
//! The block race is a binomial random walk (honest block: lead +1, attacker
//! block: lead -1), so this is the classic gambler's-ruin hitting probability:
//! 1 when p <= q, (q/p)^z when p > q.
inline double catch_up_probability(const AttackScenario& scenario)
{
    scenario.validate();
    const double p = scenario.p();
    if (p <= scenario.q) return 1.0;
    return std::pow(scenario.q / p, scenario.z);
}

namespace detail {

//! Above this lambda the e^-lambda factor underflows double precision, so the
//! Poisson weights are accumulated in log space instead.
inline constexpr double POISSON_LOG_SPACE_LAMBDA = 700.0;

//! Sum of poisson(k; lambda) * (1 - (q/p)^(z-k)) for k = 0..z, the mass the
//! attacker fails to recover. Requires q < p.
inline double double_spend_miss_mass(double q, double p, int z, double lambda)
{
    const double ratio = q / p;
    const double log_ratio = std::log(ratio); // -inf when q == 0
    double sum = 0.0;
    if (lambda <= POISSON_LOG_SPACE_LAMBDA) {
        double pois = std::exp(-lambda);
        for (int k = 0; k <= z; ++k) {
            if (k > 0) pois *= lambda / k;
            const int deficit = z - k;
            if (deficit == 0) continue; // 1 - ratio^0 == 0
            sum += pois * -std::expm1(deficit * log_ratio);
        }
    } else {
        const double log_lambda = std::log(lambda);
        for (int k = 0; k <= z; ++k) {
            const int deficit = z - k;
            if (deficit == 0) continue;
            const double log_pois = k * log_lambda - lambda - std::lgamma(k + 1.0);
            if (log_pois < -745.0) continue; // underflows to zero anyway
            sum += std::exp(log_pois) * -std::expm1(deficit * log_ratio);
        }
    }
    return sum;
}

} // namespace detail

//! Probability the attacker succeeds after the recipient has seen z
//! confirmations, not knowing the attacker's hidden progress.
//!
//! The hidden progress k is Poisson with mean lambda = z*q/p; weighting the
//! catch-up probability from each possible progress gives
//!
//!   sum_{k>=0} pois(k; lambda) * [ (q/p)^(z-k) if k <= z else 1 ]
//!
//! evaluated here via the finite rearrangement
//!
//!   1 - sum_{k=0}^{z} pois(k; lambda) * (1 - (q/p)^(z-k))
//!
//! which needs no tail truncation. For q >= p every catch-up factor is 1 and
//! so is the result.
inline RiskResult double_spend_probability(const AttackScenario& scenario)
{
    scenario.validate();
    if (scenario.q >= 1.0) {
        throw std::domain_error("attacker hash share q must be < 1 for a finite lambda");
    }
    const double p = scenario.p();
    const double lambda = scenario.z * scenario.q / p;
    if (p <= scenario.q) {
        return {1.0, lambda};
    }
    const double miss = detail::double_spend_miss_mass(scenario.q, p, scenario.z, lambda);
    double probability = 1.0 - miss;
    if (probability < 0.0) probability = 0.0;
    if (probability > 1.0) probability = 1.0;
    return {probability, lambda};
}

//! Scan ceiling for min_confirmations; epsilon values that still have not
//! been reached at this depth are unreachable in double precision.
inline constexpr int MAX_CONFIRMATION_SCAN = 1'000'000;

//! Smallest confirmation depth z with double-spend probability below epsilon.
//!
//! The probability is nonincreasing in z for q < 1/2, so an incremental scan
//! terminates. For q >= 1/2 it is 1 at every depth and no finite answer
//! exists.
inline int min_confirmations(double q, double epsilon)
{
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::domain_error("epsilon must be in (0, 1), got " + std::to_string(epsilon));
    }
    AttackScenario scenario{q, 0};
    scenario.validate();
    if (q >= 0.5) {
        throw std::domain_error("no finite depth: double-spend probability is 1 for every z when q >= 1/2");
    }
    for (int z = 0; z <= MAX_CONFIRMATION_SCAN; ++z) {
        scenario.z = z;
        if (double_spend_probability(scenario).probability < epsilon) {
            return z;
        }
    }
    throw std::runtime_error("confirmation scan exceeded depth " + std::to_string(MAX_CONFIRMATION_SCAN));
}

} // namespace chainecon
