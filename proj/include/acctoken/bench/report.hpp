// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/bench/scenario.hpp>

#include <iosfwd>

namespace acctoken::bench
{
struct RentRow
{
    double k_total = 0;
    double utilization = 0;  ///< k_total / K_max
    long double rate = 0;    ///< Wei per key per year
    std::vector<long double> annual;  ///< one entry per contract key count
};

/// Rent rate and annual rent for each contract size across a sweep of system key totals.
/// Throws std::invalid_argument if a contract holds more keys than a sweep point.
std::vector<RentRow> rent_report(const gas::RentParams& p, const std::vector<uint64_t>& contract_keys,
    const std::vector<double>& total_keys);

void write_rent_csv(std::ostream& out, const std::vector<uint64_t>& contract_keys,
    const std::vector<RentRow>& rows);

/// Everything `bench` can be configured with.
struct BenchConfig
{
    gas::CostConfig cost;
    PopulationSpec population;
    TokenKind token = TokenKind::acc;

    friend bool operator==(const BenchConfig&, const BenchConfig&) = default;
};

/// Applies `schedule.*`, `rent.*`, `scenario.*` or `fault.*`. Throws std::invalid_argument
/// for unknown keys and bad values.
void apply_bench_setting(BenchConfig& cfg, std::string_view key, std::string_view value);

/// Reads `key = value` lines; blank lines and lines starting with '#' are skipped.
void load_bench_config(BenchConfig& cfg, std::istream& in);

void dump_bench_config(std::ostream& out, const BenchConfig& cfg);

/// Comma-separated toggles: remove_precompile_call_cost, equalize_hash_costs,
/// proof_extension.
void apply_toggles(BenchConfig& cfg, std::string_view list);

std::vector<uint64_t> parse_u64_list(std::string_view list);
std::vector<double> parse_double_list(std::string_view list);
}  // namespace acctoken::bench
