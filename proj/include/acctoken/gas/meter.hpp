// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/gas/schedule.hpp>

#include <array>
#include <vector>

namespace acctoken::gas
{
enum class StorageOp : uint8_t
{
    read,
    write_new,
    write_update,
};

/// One storage-key access, with the contract's key count at the time it ran.
struct StorageAccess
{
    StorageOp op = StorageOp::read;
    uint64_t contract_keys = 0;

    friend bool operator==(const StorageAccess&, const StorageAccess&) = default;
};

struct LogEntry
{
    uint32_t topics = 0;
    uint32_t data_bytes = 0;

    friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

/// Schedule-independent record of what a transaction did.
struct TxTrace
{
    uint64_t calldata_zero_bytes = 0;
    uint64_t calldata_nonzero_bytes = 0;
    std::vector<StorageAccess> storage;
    HashTally hashing;
    std::vector<LogEntry> logs;

    void add_calldata(ByteView data) noexcept;
    void add_storage(StorageOp op, uint64_t contract_keys) { storage.push_back({op, contract_keys}); }

    [[nodiscard]] uint64_t calldata_bytes() const noexcept
    {
        return calldata_zero_bytes + calldata_nonzero_bytes;
    }

    friend bool operator==(const TxTrace&, const TxTrace&) = default;
};

enum class GasCategory : uint8_t
{
    base,
    calldata,
    hashing,
    storage_read,
    storage_write,
    other,
};

inline constexpr std::size_t gas_category_count = 6;

std::string_view to_string(GasCategory c) noexcept;

struct GasReceipt
{
    uint64_t total = 0;
    std::array<uint64_t, gas_category_count> gas{};
    std::array<uint64_t, gas_category_count> ops{};

    [[nodiscard]] uint64_t operator[](GasCategory c) const noexcept
    {
        return gas[static_cast<std::size_t>(c)];
    }

    friend bool operator==(const GasReceipt&, const GasReceipt&) = default;
};

GasReceipt meter_transaction(const GasSchedule& schedule, const TxTrace& trace);
}  // namespace acctoken::gas
