// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/bench/report.hpp>

#include <algorithm>

#include <cstdio>
#include <istream>
#include <ostream>

namespace acctoken::bench
{
std::vector<RentRow> rent_report(const gas::RentParams& p, const std::vector<uint64_t>& contract_keys,
    const std::vector<double>& total_keys)
{
    p.validate();
    std::vector<RentRow> rows;
    for (const auto k : total_keys)
    {
        RentRow r;
        r.k_total = k;
        r.utilization = k / p.k_max();
        r.rate = gas::rent_rate(p, k);
        for (const auto c : contract_keys)
            r.annual.push_back(gas::annual_rent(p, static_cast<double>(c), k));
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_rent_csv(std::ostream& out, const std::vector<uint64_t>& contract_keys,
    const std::vector<RentRow>& rows)
{
    out << "k_total,utilization,rate_wei_per_key_year";
    for (const auto c : contract_keys)
        out << ",annual_rent_wei_" << c << "_keys";
    out << '\n';
    for (const auto& r : rows)
    {
        std::array<char, 128> buf{};
        std::snprintf(buf.data(), buf.size(), "%.0f,%.6f,%.4Lf", r.k_total, r.utilization, r.rate);
        out << buf.data();
        for (const auto a : r.annual)
        {
            std::snprintf(buf.data(), buf.size(), ",%.4Le", a);
            out << buf.data();
        }
        out << '\n';
    }
}

namespace
{
template <typename T, typename Parse>
std::vector<T> parse_list(std::string_view list, Parse parse)
{
    std::vector<T> out;
    while (!list.empty())
    {
        const auto comma = list.find(',');
        out.push_back(parse(list.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        list.remove_prefix(comma + 1);
    }
    return out;
}

std::string join(const std::vector<uint64_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}
}  // namespace

std::vector<uint64_t> parse_u64_list(std::string_view list)
{
    return parse_list<uint64_t>(list, gas::parse_u64);
}

std::vector<double> parse_double_list(std::string_view list)
{
    return parse_list<double>(list, gas::parse_double);
}

void apply_bench_setting(BenchConfig& cfg, std::string_view key, std::string_view value)
{
    if (gas::apply_cost_setting(cfg.cost, key, value))
        return;
    const auto ws = " \t\r";
    key.remove_prefix(std::min(key.find_first_not_of(ws), key.size()));
    key.remove_suffix(key.size() - std::min(key.find_last_not_of(ws) + 1, key.size()));
    value.remove_prefix(std::min(value.find_first_not_of(ws), value.size()));
    value.remove_suffix(value.size() - std::min(value.find_last_not_of(ws) + 1, value.size()));
    auto& pop = cfg.population;
    auto& f = pop.fault;
    if (key == "scenario.token")
        cfg.token = parse_token_kind(value);
    else if (key == "scenario.checkpoints")
        pop.checkpoints = parse_u64_list(value);
    else if (key == "scenario.samples")
        pop.samples = gas::parse_u64(value);
    else if (key == "scenario.seed")
        pop.seed = gas::parse_u64(value);
    else if (key == "scenario.proof_extension")
        pop.proof_extension = gas::parse_bool(value);
    else if (key == "scenario.max_retries")
        pop.max_retries = gas::parse_u64(value);
    else if (key == "fault.mode")
        f.mode = storage::parse_fault_mode(value);
    else if (key == "fault.rate")
        f.rate = gas::parse_double(value);
    else if (key == "fault.lag_epochs")
        f.lag_epochs = gas::parse_u64(value);
    else if (key == "fault.probability")
        f.probability = gas::parse_double(value);
    else if (key == "fault.seed")
        f.seed = gas::parse_u64(value);
    else
        throw std::invalid_argument{"unknown setting: " + std::string{key}};
}

void load_bench_config(BenchConfig& cfg, std::istream& in)
{
    std::string line;
    for (int number = 1; std::getline(in, line); ++number)
    {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument{"line " + std::to_string(number) + ": expected key = value"};
        auto key = line.substr(first, eq - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t'))
            key.pop_back();
        apply_bench_setting(cfg, key, std::string_view{line}.substr(eq + 1));
    }
}

void dump_bench_config(std::ostream& out, const BenchConfig& cfg)
{
    gas::dump_cost_config(out, cfg.cost);
    const auto& p = cfg.population;
    out << "scenario.token = " << to_string(cfg.token) << '\n';
    out << "scenario.checkpoints = " << join(p.checkpoints) << '\n';
    out << "scenario.samples = " << p.samples << '\n';
    out << "scenario.seed = " << p.seed << '\n';
    out << "scenario.proof_extension = " << (p.proof_extension ? "true" : "false") << '\n';
    out << "scenario.max_retries = " << p.max_retries << '\n';
    out << "fault.mode = " << storage::to_string(p.fault.mode) << '\n';
    out << "fault.rate = " << gas::format_number(p.fault.rate) << '\n';
    out << "fault.lag_epochs = " << p.fault.lag_epochs << '\n';
    out << "fault.probability = " << gas::format_number(p.fault.probability) << '\n';
    out << "fault.seed = " << p.fault.seed << '\n';
}

void apply_toggles(BenchConfig& cfg, std::string_view list)
{
    for (const auto& t : parse_list<std::string>(list, [](std::string_view s) { return std::string{s}; }))
    {
        if (t == "remove_precompile_call_cost")
            cfg.cost.schedule.remove_precompile_call_cost = true;
        else if (t == "equalize_hash_costs")
            cfg.cost.schedule.equalize_hash_costs = true;
        else if (t == "proof_extension")
            cfg.population.proof_extension = true;
        else if (!t.empty())
            throw std::invalid_argument{"unknown toggle: " + t};
    }
}
}  // namespace acctoken::bench
