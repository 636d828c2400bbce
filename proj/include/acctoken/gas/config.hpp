// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/gas/rent.hpp>
#include <acctoken/gas/schedule.hpp>

#include <ostream>
#include <string>
#include <string_view>

namespace acctoken::gas
{
struct CostConfig
{
    GasSchedule schedule;
    RentParams rent;

    friend bool operator==(const CostConfig&, const CostConfig&) = default;
};

/// Applies one `schedule.*` or `rent.*` setting. Returns false for keys outside those
/// prefixes; throws std::invalid_argument for a malformed value or unknown known-prefix key.
bool apply_cost_setting(CostConfig& cfg, std::string_view key, std::string_view value);

/// Writes every setting as `key = value`, one per line, in a fixed order.
void dump_cost_config(std::ostream& out, const CostConfig& cfg);

/// Shortest round-trip decimal form.
std::string format_number(double v);

uint64_t parse_u64(std::string_view s);
double parse_double(std::string_view s);
bool parse_bool(std::string_view s);
}  // namespace acctoken::gas
