// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/bytes.hpp>

#include <bit>
#include <stdexcept>

namespace acctoken
{
unsigned first_diff_bit(const Digest& a, const Digest& b) noexcept
{
    for (unsigned i = 0; i < a.size(); ++i)
    {
        const auto x = static_cast<uint8_t>(a[i] ^ b[i]);
        if (x != 0)
            return i * 8 + static_cast<unsigned>(std::countl_zero(x));
    }
    return 256;
}

std::string to_hex(ByteView bytes)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (const auto b : bytes)
    {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

namespace
{
int hex_value(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}
}  // namespace

Bytes from_hex(std::string_view hex)
{
    if (hex.starts_with("0x") || hex.starts_with("0X"))
        hex.remove_prefix(2);
    if (hex.size() % 2 != 0)
        throw std::invalid_argument{"hex string has odd length"};
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2)
    {
        const int hi = hex_value(hex[i]);
        const int lo = hex_value(hex[i + 1]);
        if (hi < 0 || lo < 0)
            throw std::invalid_argument{"invalid hex digit"};
        out.push_back(static_cast<uint8_t>((hi << 4) | lo));
    }
    return out;
}
}  // namespace acctoken
