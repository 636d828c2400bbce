// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/token/types.hpp>

namespace acctoken::token
{
Address Address::derive(uint64_t i)
{
    std::array<uint8_t, 16> seed{'a', 'c', 'c', 'o', 'u', 'n', 't', ':'};
    for (int b = 0; b < 8; ++b)
        seed[8 + b] = static_cast<uint8_t>(i >> (56 - 8 * b));
    const auto d = sha256(ByteView{seed});
    Address a;
    std::copy_n(d.begin(), a.bytes.size(), a.bytes.begin());
    return a;
}

std::array<uint8_t, 32> to_word(const Amount& v)
{
    std::array<uint8_t, 32> out{};
    Bytes tmp;
    boost::multiprecision::export_bits(v, std::back_inserter(tmp), 8);
    std::copy(tmp.begin(), tmp.end(), out.end() - static_cast<std::ptrdiff_t>(tmp.size()));
    return out;
}

Amount amount_from_word(ByteView word)
{
    Amount v;
    boost::multiprecision::import_bits(v, word.begin(), word.end(), 8);
    return v;
}

acc::Element balance_element(const Address& owner, const Amount& amount)
{
    Bytes b;
    b.reserve(53);
    b.push_back(balance_tag);
    append(b, owner.bytes);
    append(b, to_word(amount));
    return acc::Element{std::move(b), 21};
}

acc::Element pair_element(const Address& owner, const Address& spender)
{
    Bytes b;
    b.reserve(41);
    b.push_back(pair_tag);
    append(b, owner.bytes);
    append(b, spender.bytes);
    return acc::Element{std::move(b)};
}

acc::Element allowance_element(const Address& owner, const Address& spender, const Amount& amount)
{
    Bytes b;
    b.reserve(73);
    b.push_back(allowance_tag);
    append(b, owner.bytes);
    append(b, spender.bytes);
    append(b, to_word(amount));
    return acc::Element{std::move(b), 41};
}

std::optional<BalanceTuple> parse_balance(const acc::Element& e)
{
    const auto b = e.bytes();
    if (b.size() != 53 || b[0] != balance_tag)
        return std::nullopt;
    BalanceTuple t;
    std::copy_n(b.begin() + 1, 20, t.owner.bytes.begin());
    t.amount = amount_from_word(b.subspan(21));
    return t;
}

std::optional<AllowanceTuple> parse_allowance(const acc::Element& e)
{
    const auto b = e.bytes();
    if (b.size() != 73 || b[0] != allowance_tag)
        return std::nullopt;
    AllowanceTuple t;
    std::copy_n(b.begin() + 1, 20, t.owner.bytes.begin());
    std::copy_n(b.begin() + 21, 20, t.spender.bytes.begin());
    t.amount = amount_from_word(b.subspan(41));
    return t;
}
}  // namespace acctoken::token
