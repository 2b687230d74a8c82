// Copyright (c) 2026 The chainecon developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include <chainecon/chainecon.hpp>

namespace {

using chainecon::OutputFormat;
using chainecon::ResultDocument;

std::string now_iso8601()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

//! Runs `fn` on the named file, or on stdin when the path is "-".
template <typename Fn>
auto with_input(const std::string& path, Fn&& fn)
{
    if (path == "-") return fn(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return fn(in);
}

void finish(ResultDocument& doc, const std::string& format_name)
{
    const auto format = chainecon::output_format_from_name(format_name);
    doc.add_meta("version", chainecon::VERSION);
    if (format == OutputFormat::TABLE) doc.timestamp = now_iso8601();
    chainecon::emit(doc, format, std::cout);
}

const auto check_epsilon = CLI::Validator(
    [](std::string& value) -> std::string {
        double eps = 0.0;
        if (!chainecon::detail::try_parse_double(value, eps) || !(eps > 0.0 && eps < 1.0)) {
            return "epsilon must be strictly between 0 and 1";
        }
        return {};
    },
    "EPSILON in (0,1)");

struct SeedOption {
    std::uint64_t value = 0;
    bool explicit_seed = false;

    std::uint64_t resolve()
    {
        if (!explicit_seed) {
            std::random_device rd;
            value = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        }
        return value;
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bitcoin security and monetary economics toolkit"};
    app.require_subcommand(1);

    std::string format_name = "table";
    SeedOption seed;
    app.add_option("--format", format_name, "Output format")
        ->transform(CLI::IsMember({"table", "keyvalue", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", seed.value, "RNG seed; omitted -> drawn at random and recorded")
        ->each([&seed](const std::string&) { seed.explicit_seed = true; });

    // ---- attack-prob ----------------------------------------------------
    auto* attack_prob = app.add_subcommand("attack-prob", "Closed-form double-spend risk for one attacker/depth pair");
    attack_prob->fallthrough();
    double ap_q = 0.0;
    int ap_z = 6;
    int ap_series_max = -1;
    std::string ap_preset;
    auto* ap_q_opt = attack_prob->add_option("--q", ap_q, "Attacker share of hash power")->check(CLI::Range(0.0, 1.0));
    attack_prob->add_option("--z", ap_z, "Confirmation depth")->capture_default_str()->check(CLI::NonNegativeNumber);
    auto* ap_series_opt =
        attack_prob->add_option("--series-max-z", ap_series_max, "Also emit a risk series for z = 0..N")
            ->check(CLI::NonNegativeNumber);
    attack_prob->add_option("--preset", ap_preset, "Named demo preset")->transform(CLI::IsMember({"paper-2015"}));
    attack_prob->callback([&] {
        if (!ap_preset.empty()) {
            if (ap_q_opt->count() == 0) ap_q = 0.1;
            if (ap_series_opt->count() == 0) ap_series_max = 10;
        } else if (ap_q_opt->count() == 0) {
            throw CLI::RequiredError("--q");
        }
        chainecon::AttackScenario scenario{ap_q, ap_z};
        const double catch_up = chainecon::catch_up_probability(scenario);
        const auto risk = chainecon::double_spend_probability(scenario);

        ResultDocument doc;
        doc.command = "attack-prob";
        doc.add_input("q", ap_q);
        doc.add_input("z", static_cast<double>(ap_z));
        doc.add_output("catch_up_probability", catch_up);
        doc.add_output("double_spend_probability", risk.probability);
        doc.add_output("lambda", risk.lambda);
        if (ap_series_max >= 0) {
            doc.series_header = {"z", "catch_up_probability", "double_spend_probability"};
            for (int z = 0; z <= ap_series_max; ++z) {
                chainecon::AttackScenario step{ap_q, z};
                doc.series_rows.push_back({static_cast<double>(z), chainecon::catch_up_probability(step),
                                           chainecon::double_spend_probability(step).probability});
            }
        }
        finish(doc, format_name);
    });

    // ---- attack-confirmations -------------------------------------------
    auto* attack_conf = app.add_subcommand("attack-confirmations", "Confirmations needed to push the risk below epsilon");
    attack_conf->fallthrough();
    double ac_q = 0.0;
    double ac_epsilon = 0.0;
    attack_conf->add_option("--q", ac_q, "Attacker share of hash power")->required()->check(CLI::Range(0.0, 1.0));
    attack_conf->add_option("--epsilon", ac_epsilon, "Acceptable double-spend probability")->required()->check(check_epsilon);
    attack_conf->callback([&] {
        const int depth = chainecon::min_confirmations(ac_q, ac_epsilon);
        ResultDocument doc;
        doc.command = "attack-confirmations";
        doc.add_input("q", ac_q);
        doc.add_input("epsilon", ac_epsilon);
        doc.add_output("confirmations", std::to_string(depth));
        doc.add_output("double_spend_probability",
                       chainecon::double_spend_probability({ac_q, depth}).probability);
        finish(doc, format_name);
    });

    // ---- attack-simulate -------------------------------------------------
    auto* attack_sim = app.add_subcommand("attack-simulate", "Monte Carlo chain race cross-checking the closed form");
    attack_sim->fallthrough();
    chainecon::SimConfig sim_cfg;
    std::string sim_mode = "poisson";
    unsigned sim_workers = 0;
    attack_sim->add_option("--q", sim_cfg.q, "Attacker share of hash power")->required()->check(CLI::Range(0.0, 1.0));
    attack_sim->add_option("--z", sim_cfg.z, "Confirmation depth")->required()->check(CLI::NonNegativeNumber);
    attack_sim->add_option("--trials", sim_cfg.trials, "Number of Monte Carlo trials")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    attack_sim->add_option("--mode", sim_mode, "poisson: Poisson head start; bernoulli: literal block race; walk: bare catch-up walk")
        ->transform(CLI::IsMember({"poisson", "bernoulli", "walk"}))
        ->capture_default_str();
    attack_sim->add_option("--deficit-cutoff", sim_cfg.deficit_cutoff, "Absorbing-failure deficit (default: derived)")
        ->check(CLI::PositiveNumber);
    attack_sim->add_option("--workers", sim_workers, "Worker threads (0 = auto); never affects the result");
    attack_sim->callback([&] {
        sim_cfg.seed = seed.resolve();
        if (sim_mode == "poisson") sim_cfg.mode = chainecon::RaceMode::POISSON_PROGRESS;
        else if (sim_mode == "bernoulli") sim_cfg.mode = chainecon::RaceMode::BERNOULLI_RACE;
        else sim_cfg.mode = chainecon::RaceMode::CATCH_UP_WALK;

        const auto result = chainecon::simulate_double_spend(sim_cfg, sim_workers);
        const int cutoff = sim_cfg.deficit_cutoff > 0 ? sim_cfg.deficit_cutoff
                                                      : chainecon::default_deficit_cutoff(sim_cfg.q, sim_cfg.z);
        ResultDocument doc;
        doc.command = "attack-simulate";
        doc.add_input("q", sim_cfg.q);
        doc.add_input("z", static_cast<double>(sim_cfg.z));
        doc.add_input("trials", std::to_string(sim_cfg.trials));
        doc.add_input("mode", sim_mode);
        doc.add_input("deficit_cutoff", std::to_string(cutoff));
        doc.add_output("estimate", result.estimate);
        doc.add_output("standard_error", result.standard_error);
        doc.add_output("successes", std::to_string(result.successes));
        const chainecon::AttackScenario scenario{sim_cfg.q, sim_cfg.z};
        const double closed_form = sim_cfg.mode == chainecon::RaceMode::CATCH_UP_WALK
                                       ? chainecon::catch_up_probability(scenario)
                                       : chainecon::double_spend_probability(scenario).probability;
        doc.add_output("closed_form", closed_form);
        doc.add_meta("seed", std::to_string(result.seed));
        doc.add_meta("rng", "splitmix64");
        finish(doc, format_name);
    });

    // ---- supply ------------------------------------------------------------
    auto* supply_cmd = app.add_subcommand("supply", "Block rewards, cumulative supply, money growth and inflation");
    supply_cmd->fallthrough();
    std::int64_t sp_height = 0;
    bool sp_inflation = false;
    double sp_reward = 25.0;
    double sp_supply = 0.0;
    std::int64_t sp_blocks_per_day = 144;
    auto* sp_height_opt = supply_cmd->add_option("--height", sp_height, "Block height")->check(CLI::NonNegativeNumber);
    auto* sp_infl_opt = supply_cmd->add_flag("--inflation", sp_inflation, "Compute growth/inflation from --reward and --supply");
    auto* sp_reward_opt = supply_cmd->add_option("--reward", sp_reward, "Block reward, BTC")->check(CLI::NonNegativeNumber);
    auto* sp_supply_opt = supply_cmd->add_option("--supply", sp_supply, "Circulating supply, BTC")->check(CLI::PositiveNumber);
    supply_cmd->add_option("--blocks-per-day", sp_blocks_per_day, "Blocks per day")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sp_height_opt->excludes(sp_infl_opt);
    sp_reward_opt->needs(sp_infl_opt);
    sp_supply_opt->needs(sp_infl_opt);
    supply_cmd->callback([&] {
        ResultDocument doc;
        doc.command = "supply";
        chainecon::SupplySchedule schedule;
        schedule.blocks_per_day = sp_blocks_per_day;
        if (sp_inflation) {
            if (sp_supply_opt->count() == 0) throw CLI::RequiredError("--supply");
            doc.add_input("reward", sp_reward);
            doc.add_input("supply", sp_supply);
            doc.add_input("blocks_per_day", static_cast<double>(sp_blocks_per_day));
            const double mu = chainecon::money_growth_rate(sp_reward, sp_supply, sp_blocks_per_day);
            doc.add_output("mu_daily", mu);
            doc.add_output("annual_inflation", chainecon::annualized_inflation(mu));
        } else if (sp_height_opt->count() > 0) {
            doc.add_input("height", static_cast<double>(sp_height));
            const double reward = chainecon::block_reward(schedule, sp_height);
            const double supply = chainecon::cumulative_supply(schedule, sp_height);
            doc.add_output("block_reward", reward);
            doc.add_output("cumulative_supply", supply);
            if (supply > 0.0) {
                const double mu = chainecon::money_growth_rate(reward, supply, sp_blocks_per_day);
                doc.add_output("mu_daily", mu);
                doc.add_output("annual_inflation", chainecon::annualized_inflation(mu));
            }
        } else {
            throw CLI::RequiredError("--height or --inflation");
        }
        finish(doc, format_name);
    });

    // ---- calibrate ---------------------------------------------------------
    auto* calibrate_cmd = app.add_subcommand("calibrate", "Fit the benchmark parameter table from daily aggregates");
    calibrate_cmd->fallthrough();
    std::string cal_input_path;
    std::string cal_preset;
    std::string cal_shocks_path;
    chainecon::CalibrationInputs cal_flags;
    calibrate_cmd->add_option("--input", cal_input_path, "key = value file of inputs ('-' for stdin)");
    calibrate_cmd->add_option("--preset", cal_preset, "Named input preset")->transform(CLI::IsMember({"paper-2015"}));
    calibrate_cmd->add_option("--shocks", cal_shocks_path, "Single-column file of transaction sizes");
    auto* f_tx = calibrate_cmd->add_option("--tx-per-day", cal_flags.tx_per_day, "Transactions per day");
    auto* f_vol = calibrate_cmd->add_option("--volume-per-day", cal_flags.volume_per_day, "Volume per day, BTC");
    auto* f_fee = calibrate_cmd->add_option("--fees-per-day", cal_flags.fees_per_day, "Fees per day, BTC");
    auto* f_supply = calibrate_cmd->add_option("--supply", cal_flags.supply, "Average supply, BTC");
    auto* f_blocks = calibrate_cmd->add_option("--blocks-per-day", cal_flags.blocks_per_day, "Blocks per day");
    auto* f_disc = calibrate_cmd->add_option("--annual-discount", cal_flags.annual_discount, "Annual discount factor");
    auto* f_reward = calibrate_cmd->add_option("--reward-per-block", cal_flags.reward_per_block, "Block reward, BTC");
    calibrate_cmd->callback([&] {
        chainecon::CalibrationInputs inputs; // paper-2015 defaults
        std::vector<std::pair<std::string, std::string>> provenance;
        if (!cal_input_path.empty()) {
            auto parsed = with_input(cal_input_path, [](std::istream& in) { return chainecon::parse_calibration_inputs(in); });
            inputs = parsed.inputs;
            provenance = parsed.provenance;
        } else {
            for (const char* key : {"tx_per_day", "volume_per_day", "fees_per_day", "supply",
                                    "blocks_per_day", "annual_discount", "reward_per_block"}) {
                provenance.emplace_back(key, "default");
            }
        }
        auto apply_flag = [&provenance](const CLI::Option* opt, const char* key, auto& dst, const auto& src) {
            if (opt->count() == 0) return;
            dst = src; // flag beats file beats default
            for (auto& [k, origin] : provenance) {
                if (k == key) origin = "flag";
            }
        };
        apply_flag(f_tx, "tx_per_day", inputs.tx_per_day, cal_flags.tx_per_day);
        apply_flag(f_vol, "volume_per_day", inputs.volume_per_day, cal_flags.volume_per_day);
        apply_flag(f_fee, "fees_per_day", inputs.fees_per_day, cal_flags.fees_per_day);
        apply_flag(f_supply, "supply", inputs.supply, cal_flags.supply);
        apply_flag(f_blocks, "blocks_per_day", inputs.blocks_per_day, cal_flags.blocks_per_day);
        apply_flag(f_disc, "annual_discount", inputs.annual_discount, cal_flags.annual_discount);
        apply_flag(f_reward, "reward_per_block", inputs.reward_per_block, cal_flags.reward_per_block);

        const auto params = chainecon::calibrate(inputs);

        ResultDocument doc;
        doc.command = "calibrate";
        doc.add_input("tx_per_day", inputs.tx_per_day);
        doc.add_input("volume_per_day", inputs.volume_per_day);
        doc.add_input("fees_per_day", inputs.fees_per_day);
        doc.add_input("supply", inputs.supply);
        doc.add_input("blocks_per_day", static_cast<double>(inputs.blocks_per_day));
        doc.add_input("annual_discount", inputs.annual_discount);
        doc.add_input("reward_per_block", inputs.reward_per_block);
        doc.add_output("beta", params.beta);
        doc.add_output("delta", params.delta);
        doc.add_output("mu_daily", params.mu);
        doc.add_output("tau", params.tau);
        doc.add_output("B", params.capacity);
        doc.add_output("sigma", params.sigma);
        doc.add_output("alpha", params.alpha);
        doc.add_output("avg_tx_size", params.avg_tx_size);
        doc.add_output("confirmation_lag", std::to_string(params.confirmation_lag));
        doc.add_output("tx_per_block", params.tx_per_block);
        doc.add_output("volume_per_block", params.volume_per_block);
        doc.add_output("fees_per_block", params.fees_per_block);
        if (!cal_shocks_path.empty()) {
            const auto samples = with_input(cal_shocks_path, [](std::istream& in) { return chainecon::parse_samples(in); });
            const auto shocks = chainecon::empirical_cdf(samples);
            doc.add_output("shock_samples", std::to_string(samples.size()));
            doc.add_output("shock_min", shocks.quantile(0.0));
            doc.add_output("shock_median", shocks.quantile(0.5));
            doc.add_output("shock_max", shocks.quantile(1.0));
            doc.series_header = {"transaction_size", "cumulative_probability"};
            for (const auto& pt : shocks.points()) {
                doc.series_rows.push_back({pt.size, pt.cumulative});
            }
        }
        for (const auto& [key, origin] : provenance) {
            doc.add_meta("provenance." + key, origin);
        }
        finish(doc, format_name);
    });

    // ---- wealth --------------------------------------------------------------
    auto* wealth_cmd = app.add_subcommand("wealth", "Lorenz curve and Gini coefficient over a balance snapshot");
    wealth_cmd->fallthrough();
    wealth_cmd->require_subcommand(1);
    std::string wealth_snapshot_path;
    auto add_wealth_sub = [&](const char* name, const char* desc) {
        auto* sub = wealth_cmd->add_subcommand(name, desc);
        sub->fallthrough();
        sub->add_option("--snapshot", wealth_snapshot_path, "holder,balance CSV file ('-' for stdin)")->required();
        return sub;
    };
    auto load_snapshot = [&] {
        return with_input(wealth_snapshot_path,
                          [&](std::istream& in) { return chainecon::parse_snapshot(in, wealth_snapshot_path); });
    };
    add_wealth_sub("gini", "Gini coefficient of the snapshot")->callback([&] {
        const auto snapshot = load_snapshot();
        double total = 0.0;
        for (const auto& e : snapshot.entries) total += e.balance;
        ResultDocument doc;
        doc.command = "wealth gini";
        doc.add_input("snapshot", wealth_snapshot_path);
        doc.add_output("gini", chainecon::gini(snapshot));
        doc.add_output("entries", std::to_string(snapshot.entries.size()));
        doc.add_output("total_balance", total);
        finish(doc, format_name);
    });
    add_wealth_sub("lorenz", "Lorenz curve points of the snapshot")->callback([&] {
        const auto snapshot = load_snapshot();
        const auto curve = chainecon::lorenz_curve(snapshot);
        double total = 0.0;
        for (const auto& e : snapshot.entries) total += e.balance;
        ResultDocument doc;
        doc.command = "wealth lorenz";
        doc.add_input("snapshot", wealth_snapshot_path);
        doc.add_output("gini", chainecon::gini(snapshot));
        doc.add_output("entries", std::to_string(snapshot.entries.size()));
        doc.add_output("total_balance", total);
        doc.series_header = {"population_share", "wealth_share"};
        for (const auto& pt : curve.points) {
            doc.series_rows.push_back({pt.population_share, pt.wealth_share});
        }
        finish(doc, format_name);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "chainecon: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "chainecon: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
