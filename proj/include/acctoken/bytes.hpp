// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace acctoken
{
using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

/// 32-byte hash value. Bit 0 is the most significant bit of byte 0.
using Digest = std::array<uint8_t, 32>;

inline constexpr bool bit_at(const Digest& d, unsigned index) noexcept
{
    return ((d[index >> 3] >> (7 - (index & 7))) & 1) != 0;
}

/// Index of the first bit where a and b differ, or 256 when equal.
unsigned first_diff_bit(const Digest& a, const Digest& b) noexcept;

std::string to_hex(ByteView bytes);

template <std::size_t N>
std::string to_hex(const std::array<uint8_t, N>& a)
{
    return to_hex(ByteView{a.data(), a.size()});
}

/// Parses lower- or upper-case hex, with an optional 0x prefix. Throws std::invalid_argument.
Bytes from_hex(std::string_view hex);

inline void append(Bytes& out, ByteView data)
{
    out.insert(out.end(), data.begin(), data.end());
}

template <std::size_t N>
void append(Bytes& out, const std::array<uint8_t, N>& a)
{
    out.insert(out.end(), a.begin(), a.end());
}

/// Forward-only reader over a byte span; every accessor reports underflow instead of throwing.
class ByteReader
{
public:
    explicit ByteReader(ByteView data) noexcept : data_{data} {}

    [[nodiscard]] std::size_t remaining() const noexcept { return data_.size() - pos_; }
    [[nodiscard]] std::size_t position() const noexcept { return pos_; }

    bool read_u8(uint8_t& out) noexcept
    {
        if (remaining() < 1)
            return false;
        out = data_[pos_++];
        return true;
    }

    bool read_u16_be(uint16_t& out) noexcept
    {
        if (remaining() < 2)
            return false;
        out = static_cast<uint16_t>((data_[pos_] << 8) | data_[pos_ + 1]);
        pos_ += 2;
        return true;
    }

    bool read_digest(Digest& out) noexcept
    {
        if (remaining() < out.size())
            return false;
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(pos_), out.size(), out.begin());
        pos_ += out.size();
        return true;
    }

    bool read_span(std::size_t n, ByteView& out) noexcept
    {
        if (remaining() < n)
            return false;
        out = data_.subspan(pos_, n);
        pos_ += n;
        return true;
    }

private:
    ByteView data_;
    std::size_t pos_ = 0;
};
}  // namespace acctoken
