// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/accumulator/witness.hpp>
#include <acctoken/token/ops.hpp>

namespace acctoken::token
{
/// Role of a bundle entry. Within each operation, entries must appear in increasing
/// numeric order, which is the order the contract checks them in.
enum class Purpose : uint8_t
{
    pair_member = 1,        ///< (owner, spender) in allowedAddressesAcc
    pair_absent = 2,
    allowance_member = 3,   ///< (owner, spender, a) in allowedBalancesAcc
    allowance_absent = 4,   ///< no allowance triple for (owner, spender)
    from_member = 5,        ///< (from, y1) in balancesAcc
    from_absent = 6,        ///< no balance tuple for from
    to_member = 7,
    to_absent = 8,
    del_from = 9,
    del_to = 10,
    add_from = 11,
    add_to = 12,
    add_pair = 13,
    del_allowance = 14,
    add_allowance = 15,
};

inline constexpr uint8_t max_purpose = 15;

[[nodiscard]] bool is_update(Purpose p) noexcept;

/// Witness kind an entry with this purpose must carry.
[[nodiscard]] acc::WitnessKind expected_kind(Purpose p) noexcept;

std::string to_string(Purpose p);

enum class BundleOp : uint8_t
{
    transfer = 1,
    approve = 2,
    transfer_from = 3,
};

struct BundleEntry
{
    Purpose purpose = Purpose::from_member;
    acc::Witness witness;
    acc::AccumulatorValue claimed_after;  ///< update entries only

    friend bool operator==(const BundleEntry&, const BundleEntry&) = default;
};

/// op-tag(1) || entry-count(1) || entries; each entry is
/// purpose(1) || witness || claimed-acc-after(32, update entries only).
struct ProofBundle
{
    BundleOp op = BundleOp::transfer;
    std::vector<BundleEntry> entries;

    [[nodiscard]] Bytes encode() const;
    [[nodiscard]] std::size_t count(bool updates) const noexcept;

    friend bool operator==(const ProofBundle&, const ProofBundle&) = default;
};

struct BundleDecode
{
    std::optional<ProofBundle> bundle;
    TxStatus status = TxStatus::success;  ///< schema mismatch or invalid proof on failure
    int failed_entry = -1;
};

/// Structural decode. A bad header or purpose tag is a schema mismatch; an undecodable
/// witness is an invalid proof at that entry.
BundleDecode decode_bundle(ByteView bytes);
}  // namespace acctoken::token
