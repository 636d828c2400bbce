// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

// bench: gas-versus-population runs, result comparison, rent tables and config dumps.

#include <acctoken/bench/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace acctoken;
using namespace acctoken::bench;

namespace
{
std::vector<ResultRow> load_rows(const std::string& path)
{
    std::ifstream in{path};
    if (!in)
        throw std::invalid_argument{"cannot open " + path};
    return read_csv(in);
}

/// Evenly spaced checkpoints up to max: max/8, 2*max/8, ..., max.
std::vector<uint64_t> default_checkpoints(uint64_t max)
{
    std::vector<uint64_t> out;
    for (uint64_t i = 1; i <= 8; ++i)
    {
        const auto c = max * i / 8;
        if (c >= 4 && (out.empty() || c > out.back()))
            out.push_back(c);
    }
    return out;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Gas and rent benchmarks for the accumulator token and its mapping baseline"};
    app.require_subcommand(1);

    BenchConfig cfg;
    std::string config_file;
    const auto load_config = [&] {
        if (config_file.empty())
            return;
        std::ifstream in{config_file};
        if (!in)
            throw std::invalid_argument{"cannot open " + config_file};
        load_bench_config(cfg, in);
    };

    // run
    auto* run = app.add_subcommand("run", "Grow a population and meter sampled calls");
    std::string token = "acc";
    std::string schedule;
    uint64_t max_accounts = 0;
    std::string checkpoints;
    std::optional<uint64_t> seed;
    std::optional<std::size_t> samples;
    std::string toggles;
    std::string out_path;
    bool quiet = false;
    run->add_option("--config", config_file, "key = value settings file");
    run->add_option("--token", token, "acc or baseline")->check(CLI::IsMember({"acc", "baseline"}));
    run->add_option("--schedule", schedule, "flat or scaled")->check(CLI::IsMember({"flat", "scaled"}));
    run->add_option("--max-accounts", max_accounts, "largest population (default checkpoints)");
    run->add_option("--checkpoints", checkpoints, "comma-separated account counts");
    run->add_option("--seed", seed, "randomness seed");
    run->add_option("--samples", samples, "metered calls per op kind per checkpoint");
    run->add_option("--toggles", toggles,
        "comma-separated: remove_precompile_call_cost, equalize_hash_costs, proof_extension");
    run->add_option("--out", out_path, "CSV output (default stdout)");
    run->add_flag("--quiet", quiet, "no progress on stderr");

    // compare
    auto* cmp = app.add_subcommand("compare", "Per-row gas ratios of two result files (A / B)");
    std::string csv_a;
    std::string csv_b;
    cmp->add_option("a", csv_a, "first CSV")->required();
    cmp->add_option("b", csv_b, "second CSV")->required();

    // rent
    auto* rent = app.add_subcommand("rent", "Rent rate and annual rent over a key-count sweep");
    std::optional<uint64_t> smax_gib;
    std::string keys = "4,400001";
    std::string total_keys;
    rent->add_option("--config", config_file, "key = value settings file");
    rent->add_option("--smax-gib", smax_gib, "system storage capacity in GiB");
    rent->add_option("--keys", keys, "comma-separated contract key counts");
    rent->add_option("--total-keys", total_keys, "comma-separated system key totals");

    // dump-config
    auto* dump = app.add_subcommand("dump-config", "Print every setting with its current value");
    dump->add_option("--config", config_file, "key = value settings file");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        return app.exit(e);
    }

    try
    {
        load_config();

        if (*run)
        {
            cfg.token = parse_token_kind(token);
            if (!schedule.empty())
                gas::apply_cost_setting(cfg.cost, "schedule.mode", schedule);
            if (!checkpoints.empty())
                cfg.population.checkpoints = parse_u64_list(checkpoints);
            else if (max_accounts > 0)
                cfg.population.checkpoints = default_checkpoints(max_accounts);
            if (max_accounts > 0)
                std::erase_if(cfg.population.checkpoints, [&](uint64_t c) { return c > max_accounts; });
            if (seed)
                cfg.population.seed = *seed;
            if (samples)
                cfg.population.samples = *samples;
            apply_toggles(cfg, toggles);

            const auto report = run_population(cfg.population, [&](uint64_t n, uint64_t target) {
                if (!quiet)
                    std::cerr << "\raccounts " << n << " / " << target << std::flush;
            });
            if (!quiet)
                std::cerr << '\n';
            if (!report.shadow_ok || !report.conserved || !report.constant_state)
            {
                std::cerr << "invariant violated: " << report.first_error << '\n';
                return 2;
            }
            const auto rows = summarize(report, cfg.token, cfg.cost.schedule);
            if (out_path.empty())
            {
                write_csv(std::cout, rows);
            }
            else
            {
                std::ofstream out{out_path};
                write_csv(out, rows);
            }
            return 0;
        }
        if (*cmp)
        {
            write_comparison(std::cout, compare(load_rows(csv_a), load_rows(csv_b)));
            return 0;
        }
        if (*rent)
        {
            if (smax_gib)
                gas::apply_cost_setting(cfg.cost, "rent.s_max_gib", std::to_string(*smax_gib));
            const auto& p = cfg.cost.rent;
            std::vector<double> totals;
            if (total_keys.empty())
            {
                for (const double u : {0.1, 0.25, 0.5, 0.8, 0.9, 1.0})
                    totals.push_back(u * p.k_max());
            }
            else
            {
                totals = parse_double_list(total_keys);
            }
            const auto contract_keys = parse_u64_list(keys);
            write_rent_csv(std::cout, contract_keys, rent_report(p, contract_keys, totals));
            return 0;
        }
        if (*dump)
        {
            dump_bench_config(std::cout, cfg);
            return 0;
        }
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
