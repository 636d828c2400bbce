// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/token/bundle.hpp>

namespace acctoken::token
{
bool is_update(Purpose p) noexcept
{
    return static_cast<uint8_t>(p) >= static_cast<uint8_t>(Purpose::del_from);
}

acc::WitnessKind expected_kind(Purpose p) noexcept
{
    switch (p)
    {
    case Purpose::pair_member:
    case Purpose::allowance_member:
    case Purpose::from_member:
    case Purpose::to_member:
        return acc::WitnessKind::membership;
    case Purpose::pair_absent:
    case Purpose::allowance_absent:
    case Purpose::from_absent:
    case Purpose::to_absent:
        return acc::WitnessKind::non_membership;
    case Purpose::del_from:
    case Purpose::del_to:
    case Purpose::del_allowance:
        return acc::WitnessKind::update_del;
    case Purpose::add_from:
    case Purpose::add_to:
    case Purpose::add_pair:
    case Purpose::add_allowance:
        return acc::WitnessKind::update_add;
    }
    return acc::WitnessKind::membership;
}

std::string to_string(Purpose p)
{
    static constexpr std::array<const char*, max_purpose + 1> names{"?", "pair_member",
        "pair_absent", "allowance_member", "allowance_absent", "from_member", "from_absent",
        "to_member", "to_absent", "del_from", "del_to", "add_from", "add_to", "add_pair",
        "del_allowance", "add_allowance"};
    const auto i = static_cast<uint8_t>(p);
    return i <= max_purpose ? names[i] : "?";
}

Bytes ProofBundle::encode() const
{
    Bytes out;
    out.push_back(static_cast<uint8_t>(op));
    out.push_back(static_cast<uint8_t>(entries.size()));
    for (const auto& e : entries)
    {
        out.push_back(static_cast<uint8_t>(e.purpose));
        acc::encode_to(out, e.witness);
        if (is_update(e.purpose))
            append(out, e.claimed_after.digest);
    }
    return out;
}

std::size_t ProofBundle::count(bool updates) const noexcept
{
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
        [&](const BundleEntry& e) { return is_update(e.purpose) == updates; }));
}

BundleDecode decode_bundle(ByteView bytes)
{
    BundleDecode out;
    out.status = TxStatus::bundle_schema_mismatch;
    ByteReader r{bytes};
    uint8_t op = 0;
    uint8_t n = 0;
    if (!r.read_u8(op) || op < 1 || op > 3 || !r.read_u8(n))
        return out;

    ProofBundle b;
    b.op = static_cast<BundleOp>(op);
    for (int i = 0; i < n; ++i)
    {
        uint8_t purpose = 0;
        if (!r.read_u8(purpose) || purpose < 1 || purpose > max_purpose)
        {
            out.failed_entry = i;
            return out;
        }
        BundleEntry e;
        e.purpose = static_cast<Purpose>(purpose);
        auto w = acc::decode_witness(r);
        if (!w || (is_update(e.purpose) && !r.read_digest(e.claimed_after.digest)))
        {
            out.status = TxStatus::invalid_proof;
            out.failed_entry = i;
            return out;
        }
        e.witness = std::move(*w);
        b.entries.push_back(std::move(e));
    }
    if (r.remaining() != 0)
        return out;
    out.bundle = std::move(b);
    out.status = TxStatus::success;
    return out;
}
}  // namespace acctoken::token
