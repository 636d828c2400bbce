// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/accumulator/witness.hpp>

namespace acctoken::acc
{
void encode_to(Bytes& out, const Witness& w)
{
    out.reserve(out.size() + witness_size_bytes(w));
    out.push_back(static_cast<uint8_t>(w.kind));
    append(out, w.element_digest);
    const auto n = static_cast<uint16_t>(w.steps.size());
    out.push_back(static_cast<uint8_t>(n >> 8));
    out.push_back(static_cast<uint8_t>(n & 0xff));
    for (const auto& s : w.steps)
    {
        out.push_back(s.depth);
        append(out, s.sibling);
    }
    if (w.terminal)
    {
        append(out, w.terminal->key);
        append(out, w.terminal->digest);
    }
}

Bytes encode(const Witness& w)
{
    Bytes out;
    encode_to(out, w);
    return out;
}

std::optional<Witness> decode_witness(ByteReader& reader)
{
    uint8_t kind = 0;
    if (!reader.read_u8(kind) || kind < 1 || kind > 4)
        return std::nullopt;

    Witness w;
    w.kind = static_cast<WitnessKind>(kind);
    uint16_t count = 0;
    if (!reader.read_digest(w.element_digest) || !reader.read_u16_be(count))
        return std::nullopt;
    if (count > max_path_steps || reader.remaining() < std::size_t{count} * witness_step_bytes)
        return std::nullopt;

    w.steps.resize(count);
    for (auto& s : w.steps)
    {
        reader.read_u8(s.depth);
        reader.read_digest(s.sibling);
    }
    if (is_absence_kind(w.kind))
    {
        Terminal t;
        if (!reader.read_digest(t.key) || !reader.read_digest(t.digest))
            return std::nullopt;
        w.terminal = t;
    }
    return w;
}

std::optional<Witness> decode_witness(ByteView bytes)
{
    ByteReader reader{bytes};
    auto w = decode_witness(reader);
    if (!w || reader.remaining() != 0)
        return std::nullopt;
    return w;
}

std::size_t witness_size_bytes(const Witness& w) noexcept
{
    return witness_header_bytes + witness_step_bytes * w.steps.size() +
           (w.terminal ? witness_terminal_bytes : 0);
}
}  // namespace acctoken::acc
