// Copyright (c) 2026 The chainecon developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <chainecon/chainecon.hpp>

#include "cli_runner.hpp"
#include "oracles.hpp"

namespace {

struct Checker {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what)
    {
        if (!ok) failures.push_back(what);
    }

    void require_close(double actual, double expected, double tolerance, const std::string& what)
    {
        if (!(std::abs(actual - expected) <= tolerance)) {
            std::ostringstream msg;
            msg << what << ": got " << actual << ", want " << expected << " +- " << tolerance;
            failures.push_back(msg.str());
        }
    }
};

int g_failed_criteria = 0;

void run_criterion(int number, const std::string& name, double time_limit_seconds,
                   const std::function<void(Checker&)>& body)
{
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(checker);
    } catch (const std::exception& e) {
        checker.failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= time_limit_seconds) {
        std::ostringstream msg;
        msg << "runtime " << elapsed << " s exceeded limit " << time_limit_seconds << " s";
        checker.failures.push_back(msg.str());
    }
    if (checker.failures.empty()) {
        std::printf("PASS  %d. %s (%.2f s)\n", number, name.c_str(), elapsed);
    } else {
        ++g_failed_criteria;
        std::printf("FAIL  %d. %s (%.2f s)\n", number, name.c_str(), elapsed);
        for (const auto& failure : checker.failures) {
            std::printf("      - %s\n", failure.c_str());
        }
    }
    std::fflush(stdout);
}

double kv_number(const std::string& text, const std::string& key)
{
    std::istringstream in(text);
    for (const auto& [k, v] : chainecon::parse_keyvalue(in)) {
        if (k == key) return std::stod(v);
    }
    throw std::runtime_error("key not found in CLI output: " + key);
}

} // namespace

int main()
{
    using chainecon::AttackScenario;

    run_criterion(1, "calibration table reproduction (calibrate --preset paper-2015)", 1.0, [](Checker& c) {
        const auto run = cli_test::run_cli("calibrate --preset paper-2015 --format keyvalue");
        c.require(run.exit_code == 0, "calibrate exited nonzero");
        if (run.exit_code != 0) return;
        c.require_close(kv_number(run.out, "output.beta"), 0.999916553598325, 1e-12, "beta");
        c.require_close(kv_number(run.out, "output.delta"), 0.999999420487088, 1e-12, "delta");
        c.require_close(kv_number(run.out, "output.confirmation_lag"), 143.0, 0.0, "confirmation lag");
        c.require_close(kv_number(run.out, "output.tau"), 0.000088129, 1e-9, "tau");
        c.require_close(kv_number(run.out, "output.sigma"), 0.0178, 2e-4, "sigma");
        c.require_close(kv_number(run.out, "output.B"), 6873428.441, 1.0, "B");
        c.require_close(kv_number(run.out, "output.avg_tx_size"), 2.086659237, 1e-9, "avg transaction size");
        c.require_close(kv_number(run.out, "output.tx_per_block"), 848.1232877, 1e-7, "per-block transactions");
        c.require_close(kv_number(run.out, "output.volume_per_block"), 1769.744292, 1e-6, "per-block volume");
        c.require_close(kv_number(run.out, "output.fees_per_block"), 0.15596529, 1e-8, "per-block fees");
    });

    run_criterion(2, "monetary rates (2015 growth and inflation)", 1.0, [](Checker& c) {
        const double mu = chainecon::money_growth_rate(25.0, 14342502.95, 144);
        c.require_close(mu, 1.00025, 1e-5, "daily money growth");
        c.require_close(chainecon::annualized_inflation(mu), 0.096, 0.001, "annual inflation");
    });

    run_criterion(3, "attack-model dual-oracle agreement (<= 1e-12 on the q,z grid)", 1.0, [](Checker& c) {
        double worst = 0.0;
        for (int qi = 1; qi <= 9; ++qi) {
            const double q = 0.05 * qi;
            for (int z = 0; z <= 30; ++z) {
                const double closed = chainecon::double_spend_probability({q, z}).probability;
                const double series = oracle::double_spend_series(q, z);
                worst = std::max(worst, std::abs(closed - series));
            }
        }
        c.require(worst <= 1e-12, "max |finite - series| = " + std::to_string(worst));
    });

    run_criterion(4, "Monte Carlo validation (10^6 trials, 12-cell grid, <= 1 miss)", 60.0, [](Checker& c) {
        int misses = 0;
        std::ostringstream detail;
        for (double q : {0.1, 0.2, 0.3}) {
            for (int z : {1, 2, 4, 6}) {
                chainecon::SimConfig cfg;
                cfg.q = q;
                cfg.z = z;
                cfg.trials = 1'000'000;
                cfg.seed = 20150101;
                cfg.mode = chainecon::RaceMode::POISSON_PROGRESS;
                const auto result = chainecon::simulate_double_spend(cfg);
                const double closed = chainecon::double_spend_probability({q, z}).probability;
                if (std::abs(result.estimate - closed) > 3.0 * result.standard_error) {
                    ++misses;
                    detail << " (q=" << q << ",z=" << z << ")";
                }
            }
        }
        c.require(misses <= 1, "cells beyond 3 sigma: " + std::to_string(misses) + detail.str());
    });

    run_criterion(5, "confirmation-depth golden values", 1.0, [](Checker& c) {
        c.require(chainecon::min_confirmations(0.1, 0.001) == 5, "min_confirmations(0.1, 0.001) != 5");
        const int golden = 24; // frozen output of the series-oracle scan
        c.require(chainecon::min_confirmations(0.3, 0.001) == golden, "min_confirmations(0.3, 0.001) != 24");
        c.require(oracle::min_confirmations_scan(0.3, 0.001) == golden, "oracle scan moved off the golden value");
    });

    run_criterion(6, "supply conservation (closed form vs block-by-block, cap, halvings)", 5.0, [](Checker& c) {
        chainecon::SupplySchedule reduced;
        reduced.halving_interval = 1000;
        for (std::int64_t height = 0; height <= 10'000; height += std::max<std::int64_t>(1, 137)) {
            const auto closed = chainecon::cumulative_supply_sat(reduced, height);
            const auto brute = oracle::brute_force_supply_sat(reduced, height);
            if (std::llabs(closed - brute) > 100) { // 100 sat = 1e-6 BTC
                c.require(false, "mismatch at height " + std::to_string(height));
                return;
            }
            if (closed > reduced.max_supply) {
                c.require(false, "supply exceeded the cap at height " + std::to_string(height));
                return;
            }
        }
        for (std::int64_t era = 1; era <= 10; ++era) {
            const auto before = chainecon::block_reward_sat(reduced, era * 1000 - 1);
            const auto after = chainecon::block_reward_sat(reduced, era * 1000);
            if (before > 0) {
                c.require(after == before / 2, "reward did not halve at era " + std::to_string(era));
            }
        }
        const chainecon::SupplySchedule mainnet;
        c.require(chainecon::cumulative_supply(mainnet, 210'000 * 100) < 21'000'000.0,
                  "all-time supply reached the cap");
    });

    run_criterion(7, "gini property suite (three routes, invariances, fixtures)", 5.0, [](Checker& c) {
        auto snapshot_of = [](const std::vector<double>& balances) {
            chainecon::BalanceSnapshot snap;
            for (std::size_t i = 0; i < balances.size(); ++i) {
                snap.entries.push_back({"h" + std::to_string(i), balances[i]});
            }
            return snap;
        };
        c.require(chainecon::gini(snapshot_of({1, 1, 1, 1})) == 0.0, "gini([1,1,1,1]) != 0");
        c.require_close(chainecon::gini(snapshot_of({0, 0, 0, 4})), 0.75, 1e-15, "gini([0,0,0,4])");
        c.require_close(chainecon::gini(snapshot_of({1, 2, 3, 4})), 0.25, 1e-15, "gini([1,2,3,4])");

        chainecon::SplitMix64 rng(424242);
        double worst_route = 0.0;
        double worst_invariance = 0.0;
        for (int iter = 0; iter < 1000; ++iter) {
            const int n = 1 + static_cast<int>(rng.next() % 50);
            std::vector<double> balances(n);
            bool any = false;
            for (auto& b : balances) {
                b = rng.uniform01() < 0.1 ? 0.0 : 10.0 * rng.uniform01();
                any = any || b > 0.0;
            }
            if (!any) balances[0] = 2.0;
            const auto snap = snapshot_of(balances);
            const double rank = chainecon::gini(snap);
            worst_route = std::max(worst_route, std::abs(rank - oracle::gini_pairwise(balances)));
            worst_route = std::max(worst_route,
                                   std::abs(rank - oracle::gini_from_lorenz(chainecon::lorenz_curve(snap))));

            std::vector<double> scaled(balances);
            for (auto& b : scaled) b *= 1717.25;
            worst_invariance = std::max(worst_invariance, std::abs(chainecon::gini(snapshot_of(scaled)) - rank));

            std::vector<double> reversed(balances.rbegin(), balances.rend());
            worst_invariance = std::max(worst_invariance, std::abs(chainecon::gini(snapshot_of(reversed)) - rank));

            std::vector<double> replicated;
            for (int k = 0; k < 3; ++k) replicated.insert(replicated.end(), balances.begin(), balances.end());
            worst_invariance = std::max(worst_invariance, std::abs(chainecon::gini(snapshot_of(replicated)) - rank));
        }
        c.require(worst_route <= 1e-12, "route disagreement " + std::to_string(worst_route));
        c.require(worst_invariance <= 1e-12, "invariance violation " + std::to_string(worst_invariance));
    });

    run_criterion(8, "determinism (seeded CLI runs are byte-identical)", 30.0, [](Checker& c) {
        const std::string kv_cmd = "attack-simulate --q 0.1 --z 4 --trials 50000 --seed 97 --mode bernoulli --format keyvalue";
        const auto kv_a = cli_test::run_cli(kv_cmd);
        const auto kv_b = cli_test::run_cli(kv_cmd);
        c.require(kv_a.exit_code == 0, "attack-simulate exited nonzero");
        c.require(kv_a.out == kv_b.out, "KEYVALUE output differs between identical runs");

        const std::string csv_cmd = "attack-prob --q 0.1 --series-max-z 10 --seed 5 --format csv";
        const auto csv_a = cli_test::run_cli(csv_cmd);
        const auto csv_b = cli_test::run_cli(csv_cmd);
        c.require(csv_a.exit_code == 0, "attack-prob exited nonzero");
        c.require(csv_a.out == csv_b.out, "CSV output differs between identical runs");
    });

    if (g_failed_criteria == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failed_criteria);
    return 1;
}
