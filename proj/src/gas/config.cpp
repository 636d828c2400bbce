// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/gas/config.hpp>

#include <array>
#include <charconv>
#include <stdexcept>

namespace acctoken::gas
{
namespace
{
struct U64Field
{
    std::string_view name;
    uint64_t GasSchedule::*field;
};

constexpr std::array schedule_fields{
    U64Field{"base_tx_gas", &GasSchedule::base_tx_gas},
    U64Field{"calldata_zero_byte_gas", &GasSchedule::calldata_zero_byte_gas},
    U64Field{"calldata_nonzero_byte_gas", &GasSchedule::calldata_nonzero_byte_gas},
    U64Field{"sload_gas", &GasSchedule::sload_gas},
    U64Field{"sstore_new_gas", &GasSchedule::sstore_new_gas},
    U64Field{"sstore_update_gas", &GasSchedule::sstore_update_gas},
    U64Field{"sha256_base_gas", &GasSchedule::sha256_base_gas},
    U64Field{"sha256_word_gas", &GasSchedule::sha256_word_gas},
    U64Field{"keccak_base_gas", &GasSchedule::keccak_base_gas},
    U64Field{"keccak_word_gas", &GasSchedule::keccak_word_gas},
    U64Field{"precompile_call_gas", &GasSchedule::precompile_call_gas},
    U64Field{"read_access_factor", &GasSchedule::read_access_factor},
    U64Field{"write_amplification", &GasSchedule::write_amplification},
    U64Field{"log_gas", &GasSchedule::log_gas},
    U64Field{"log_topic_gas", &GasSchedule::log_topic_gas},
    U64Field{"log_data_byte_gas", &GasSchedule::log_data_byte_gas},
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool apply_schedule(GasSchedule& s, std::string_view key, std::string_view value)
{
    if (key == "mode")
    {
        if (value == "flat")
            s.mode = PricingMode::flat;
        else if (value == "scaled")
            s.mode = PricingMode::scaled;
        else
            throw std::invalid_argument{"schedule.mode must be flat or scaled"};
        return true;
    }
    if (key == "remove_precompile_call_cost")
    {
        s.remove_precompile_call_cost = parse_bool(value);
        return true;
    }
    if (key == "equalize_hash_costs")
    {
        s.equalize_hash_costs = parse_bool(value);
        return true;
    }
    for (const auto& f : schedule_fields)
    {
        if (f.name == key)
        {
            s.*f.field = parse_u64(value);
            return true;
        }
    }
    return false;
}

bool apply_rent(RentParams& r, std::string_view key, std::string_view value)
{
    if (key == "s_max_gib")
        r.s_max_bytes = parse_u64(value) * gib;
    else if (key == "s_max_bytes")
        r.s_max_bytes = parse_u64(value);
    else if (key == "bytes_per_key")
        r.bytes_per_key = parse_u64(value);
    else if (key == "u_low")
        r.u_low = parse_double(value);
    else if (key == "u_high")
        r.u_high = parse_double(value);
    else if (key == "r_base")
        r.r_base = parse_double(value);
    else
        return false;
    return true;
}
}  // namespace

uint64_t parse_u64(std::string_view s)
{
    s = trim(s);
    uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument{"expected an unsigned integer: " + std::string{s}};
    return v;
}

double parse_double(std::string_view s)
{
    s = trim(s);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument{"expected a number: " + std::string{s}};
    return v;
}

bool parse_bool(std::string_view s)
{
    s = trim(s);
    if (s == "true" || s == "1")
        return true;
    if (s == "false" || s == "0")
        return false;
    throw std::invalid_argument{"expected true or false: " + std::string{s}};
}

std::string format_number(double v)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

bool apply_cost_setting(CostConfig& cfg, std::string_view key, std::string_view value)
{
    key = trim(key);
    value = trim(value);
    if (key.starts_with("schedule."))
    {
        if (!apply_schedule(cfg.schedule, key.substr(9), value))
            throw std::invalid_argument{"unknown setting: " + std::string{key}};
        return true;
    }
    if (key.starts_with("rent."))
    {
        if (!apply_rent(cfg.rent, key.substr(5), value))
            throw std::invalid_argument{"unknown setting: " + std::string{key}};
        return true;
    }
    return false;
}

void dump_cost_config(std::ostream& out, const CostConfig& cfg)
{
    const auto& s = cfg.schedule;
    out << "schedule.mode = " << to_string(s.mode) << '\n';
    for (const auto& f : schedule_fields)
        out << "schedule." << f.name << " = " << s.*f.field << '\n';
    out << "schedule.remove_precompile_call_cost = "
        << (s.remove_precompile_call_cost ? "true" : "false") << '\n';
    out << "schedule.equalize_hash_costs = " << (s.equalize_hash_costs ? "true" : "false") << '\n';

    const auto& r = cfg.rent;
    out << "rent.s_max_bytes = " << r.s_max_bytes << '\n';
    out << "rent.bytes_per_key = " << r.bytes_per_key << '\n';
    out << "rent.u_low = " << format_number(r.u_low) << '\n';
    out << "rent.u_high = " << format_number(r.u_high) << '\n';
    out << "rent.r_base = " << format_number(r.r_base) << '\n';
}
}  // namespace acctoken::gas
