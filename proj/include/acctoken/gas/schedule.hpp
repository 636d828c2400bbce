// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/sha256.hpp>

#include <cstdint>
#include <string_view>

namespace acctoken::gas
{
enum class PricingMode : uint8_t
{
    flat,    ///< Ethereum's constant storage prices
    scaled,  ///< storage prices scale with LSM-tree accesses, log2 of the contract's key count
};

/// Pricing constants. Defaults are Ethereum's (Byzantium-era) values.
struct GasSchedule
{
    PricingMode mode = PricingMode::flat;

    uint64_t base_tx_gas = 21'000;
    uint64_t calldata_zero_byte_gas = 4;
    uint64_t calldata_nonzero_byte_gas = 68;

    uint64_t sload_gas = 200;
    uint64_t sstore_new_gas = 20'000;
    uint64_t sstore_update_gas = 5'000;

    uint64_t sha256_base_gas = 60;
    uint64_t sha256_word_gas = 12;
    uint64_t keccak_base_gas = 30;
    uint64_t keccak_word_gas = 6;
    uint64_t precompile_call_gas = 700;

    /// Drop the message-call charge for invoking the SHA-256 precompile.
    bool remove_precompile_call_cost = false;
    /// Price SHA-256 like the KECCAK-256 opcode.
    bool equalize_hash_costs = false;

    /// Binary searches per storage-key lookup (trie node + key, two per LSM fetch).
    uint64_t read_access_factor = 4;
    /// LSM compaction write amplification applied to storage writes.
    uint64_t write_amplification = 11;

    uint64_t log_gas = 375;
    uint64_t log_topic_gas = 375;
    uint64_t log_data_byte_gas = 8;

    [[nodiscard]] uint64_t write_access_factor() const noexcept
    {
        return write_amplification * read_access_factor;
    }

    friend bool operator==(const GasSchedule&, const GasSchedule&) = default;
};

enum class StoreKind : uint8_t
{
    new_key,
    update,
};

/// L(n) = max(1, ceil(log2(max(n, 2)))).
uint64_t access_levels(uint64_t n_contract_keys) noexcept;

uint64_t sload_cost(const GasSchedule& s, uint64_t n_contract_keys) noexcept;
uint64_t sstore_cost(const GasSchedule& s, StoreKind kind, uint64_t n_contract_keys) noexcept;

/// One SHA-256 invocation over input_bytes.
uint64_t hash_cost(const GasSchedule& s, uint64_t input_bytes) noexcept;

/// Cost of a batch of SHA-256 invocations.
uint64_t hash_cost(const GasSchedule& s, const HashTally& tally) noexcept;

std::string_view to_string(PricingMode m) noexcept;
}  // namespace acctoken::gas
