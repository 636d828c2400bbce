// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/bytes.hpp>

#include <initializer_list>

namespace acctoken
{
/// Running count of hash invocations and their input words (32-byte words, rounded up).
///
/// Hash pricing is affine in (calls, words), so this pair is all the gas meter needs
/// to price hashing under any schedule.
struct HashTally
{
    uint64_t calls = 0;
    uint64_t words = 0;

    void record(std::size_t input_bytes) noexcept
    {
        ++calls;
        words += (input_bytes + 31) / 32;
    }

    HashTally& operator+=(const HashTally& o) noexcept
    {
        calls += o.calls;
        words += o.words;
        return *this;
    }

    friend bool operator==(const HashTally&, const HashTally&) = default;
};

/// SHA-256 over the concatenation of parts.
Digest sha256(std::initializer_list<ByteView> parts, HashTally* tally = nullptr);

inline Digest sha256(ByteView data, HashTally* tally = nullptr)
{
    return sha256({data}, tally);
}
}  // namespace acctoken
