// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/gas/schedule.hpp>

#include <algorithm>
#include <bit>

namespace acctoken::gas
{
uint64_t access_levels(uint64_t n_contract_keys) noexcept
{
    const uint64_t n = std::max<uint64_t>(n_contract_keys, 2);
    return std::max<uint64_t>(1, static_cast<uint64_t>(std::bit_width(n - 1)));
}

uint64_t sload_cost(const GasSchedule& s, uint64_t n_contract_keys) noexcept
{
    if (s.mode == PricingMode::flat)
        return s.sload_gas;
    return s.sload_gas * s.read_access_factor * access_levels(n_contract_keys);
}

uint64_t sstore_cost(const GasSchedule& s, StoreKind kind, uint64_t n_contract_keys) noexcept
{
    const uint64_t flat = kind == StoreKind::new_key ? s.sstore_new_gas : s.sstore_update_gas;
    if (s.mode == PricingMode::flat)
        return flat;
    return flat * s.write_access_factor() * access_levels(n_contract_keys);
}

namespace
{
struct HashPrice
{
    uint64_t per_call;
    uint64_t per_word;
};

HashPrice hash_price(const GasSchedule& s) noexcept
{
    HashPrice p = s.equalize_hash_costs ? HashPrice{s.keccak_base_gas, s.keccak_word_gas} :
                                          HashPrice{s.sha256_base_gas, s.sha256_word_gas};
    if (!s.remove_precompile_call_cost)
        p.per_call += s.precompile_call_gas;
    return p;
}
}  // namespace

uint64_t hash_cost(const GasSchedule& s, uint64_t input_bytes) noexcept
{
    const auto p = hash_price(s);
    return p.per_call + p.per_word * ((input_bytes + 31) / 32);
}

uint64_t hash_cost(const GasSchedule& s, const HashTally& tally) noexcept
{
    const auto p = hash_price(s);
    return p.per_call * tally.calls + p.per_word * tally.words;
}

std::string_view to_string(PricingMode m) noexcept
{
    return m == PricingMode::flat ? "flat" : "scaled";
}
}  // namespace acctoken::gas
