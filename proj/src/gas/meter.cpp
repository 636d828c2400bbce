// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/gas/meter.hpp>

#include <algorithm>
#include <numeric>

namespace acctoken::gas
{
void TxTrace::add_calldata(ByteView data) noexcept
{
    const auto zeros = static_cast<uint64_t>(std::count(data.begin(), data.end(), uint8_t{0}));
    calldata_zero_bytes += zeros;
    calldata_nonzero_bytes += data.size() - zeros;
}

std::string_view to_string(GasCategory c) noexcept
{
    switch (c)
    {
    case GasCategory::base:
        return "base";
    case GasCategory::calldata:
        return "calldata";
    case GasCategory::hashing:
        return "hashing";
    case GasCategory::storage_read:
        return "storage_read";
    case GasCategory::storage_write:
        return "storage_write";
    case GasCategory::other:
        return "other";
    }
    return "unknown";
}

GasReceipt meter_transaction(const GasSchedule& schedule, const TxTrace& trace)
{
    GasReceipt r;
    const auto charge = [&r](GasCategory c, uint64_t gas, uint64_t ops) {
        r.gas[static_cast<std::size_t>(c)] += gas;
        r.ops[static_cast<std::size_t>(c)] += ops;
    };

    charge(GasCategory::base, schedule.base_tx_gas, 1);
    charge(GasCategory::calldata,
        trace.calldata_zero_bytes * schedule.calldata_zero_byte_gas +
            trace.calldata_nonzero_bytes * schedule.calldata_nonzero_byte_gas,
        trace.calldata_bytes());
    charge(GasCategory::hashing, hash_cost(schedule, trace.hashing), trace.hashing.calls);

    for (const auto& a : trace.storage)
    {
        switch (a.op)
        {
        case StorageOp::read:
            charge(GasCategory::storage_read, sload_cost(schedule, a.contract_keys), 1);
            break;
        case StorageOp::write_new:
            charge(GasCategory::storage_write,
                sstore_cost(schedule, StoreKind::new_key, a.contract_keys), 1);
            break;
        case StorageOp::write_update:
            charge(GasCategory::storage_write,
                sstore_cost(schedule, StoreKind::update, a.contract_keys), 1);
            break;
        }
    }

    for (const auto& l : trace.logs)
    {
        charge(GasCategory::other,
            schedule.log_gas + schedule.log_topic_gas * l.topics +
                schedule.log_data_byte_gas * l.data_bytes,
            1);
    }

    r.total = std::accumulate(r.gas.begin(), r.gas.end(), uint64_t{0});
    return r;
}
}  // namespace acctoken::gas
