// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/accumulator/element.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <functional>
#include <optional>
#include <string>

namespace acctoken::token
{
/// Unsigned 256-bit token amount; arithmetic throws std::overflow_error / std::range_error
/// instead of wrapping.
using Amount = boost::multiprecision::checked_uint256_t;

struct Address
{
    std::array<uint8_t, 20> bytes{};

    [[nodiscard]] std::string hex() const { return "0x" + to_hex(bytes); }

    /// Deterministic pseudo-random address for account number i.
    static Address derive(uint64_t i);

    friend auto operator<=>(const Address&, const Address&) = default;
};

struct AddressHash
{
    std::size_t operator()(const Address& a) const noexcept
    {
        std::size_t h = 0;
        std::memcpy(&h, a.bytes.data(), sizeof(h));
        return h;
    }
};

struct AddressPairHash
{
    std::size_t operator()(const std::pair<Address, Address>& p) const noexcept
    {
        return AddressHash{}(p.first) * 31 + AddressHash{}(p.second);
    }
};

/// 32-byte big-endian encoding.
std::array<uint8_t, 32> to_word(const Amount& v);
Amount amount_from_word(ByteView word);

// Element encodings. Tags keep the three accumulators' domains disjoint:
//   balance    0x01 || address(20) || amount(32)          keyed by tag || address
//   pair       0x02 || owner(20) || spender(20)           keyed by the whole element
//   allowance  0x03 || owner(20) || spender(20) || amount(32)  keyed by tag || owner || spender
inline constexpr uint8_t balance_tag = 0x01;
inline constexpr uint8_t pair_tag = 0x02;
inline constexpr uint8_t allowance_tag = 0x03;

acc::Element balance_element(const Address& owner, const Amount& amount);
acc::Element pair_element(const Address& owner, const Address& spender);
acc::Element allowance_element(const Address& owner, const Address& spender, const Amount& amount);

struct BalanceTuple
{
    Address owner;
    Amount amount;
};

struct AllowanceTuple
{
    Address owner;
    Address spender;
    Amount amount;
};

std::optional<BalanceTuple> parse_balance(const acc::Element& e);
std::optional<AllowanceTuple> parse_allowance(const acc::Element& e);
}  // namespace acctoken::token
