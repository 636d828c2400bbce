// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/baseline/baseline_token.hpp>

namespace acctoken::baseline
{
namespace
{
using Word = std::array<uint8_t, 32>;

/// Plain ABI calldata: selector followed by the argument words.
void add_abi_calldata(TxResult& r, const std::array<uint8_t, 4>& selector,
    std::initializer_list<Word> words)
{
    Bytes data;
    append(data, selector);
    for (const auto& w : words)
        append(data, w);
    r.trace.add_calldata(data);
}

template <typename Map, typename Key>
Amount read(TxResult& r, uint64_t keys, const Map& m, const Key& key)
{
    r.trace.add_storage(gas::StorageOp::read, keys);
    const auto it = m.find(key);
    return it == m.end() ? Amount{} : it->second;
}

bool add_overflows(const Amount& a, const Amount& b)
{
    try
    {
        (void)(a + b);
        return false;
    }
    catch (const std::overflow_error&)
    {
        return true;
    }
}
}  // namespace

template <typename Map, typename Key>
void BaselineToken::store(TxResult& r, Map& m, const Key& key, const Amount& v)
{
    const auto keys = key_count();
    const auto it = m.find(key);
    const bool existed = it != m.end();
    r.trace.add_storage(existed || v == 0 ? gas::StorageOp::write_update : gas::StorageOp::write_new,
        keys);
    if (v == 0)
    {
        if (existed)
            m.erase(it);
    }
    else if (existed)
    {
        it->second = v;
    }
    else
    {
        m.emplace(key, v);
    }
}

TxStatus BaselineToken::deploy(const Address& deployer, const Amount& total)
{
    if (total == 0)
        return TxStatus::zero_supply;
    balances_.clear();
    allowed_.clear();
    balances_.emplace(deployer, total);
    total_supply_ = total;
    logs_.push_back({token::LogRecord::Kind::transfer, Address{}, deployer, total});
    return TxStatus::success;
}

TxResult BaselineToken::execute(const TokenOp& op)
{
    switch (op.kind)
    {
    case token::OpKind::transfer:
        return transfer(op.from, op.to, op.tokens);
    case token::OpKind::approve:
        return approve(op.from, op.to, op.tokens);
    case token::OpKind::transfer_from:
        return transfer_from(op.sender, op.from, op.to, op.tokens);
    }
    return {};
}

TxResult BaselineToken::transfer(const Address& from, const Address& to, const Amount& tokens)
{
    TxResult r;
    add_abi_calldata(r, token::transfer_selector, {token::to_word(to), token::to_word(tokens)});
    if (from == to)
    {
        r.status = TxStatus::self_transfer;
        return r;
    }
    const auto keys = key_count();
    const auto y1 = read(r, keys, balances_, from);
    const auto y2 = read(r, keys, balances_, to);
    if (y1 < tokens)
        r.status = TxStatus::insufficient_balance;
    else if (add_overflows(y2, tokens))
        r.status = TxStatus::overflow;
    if (!r.ok())
        return r;

    store(r, balances_, from, y1 - tokens);
    store(r, balances_, to, y2 + tokens);
    r.trace.logs.push_back(token::erc20_event_log);
    logs_.push_back({token::LogRecord::Kind::transfer, from, to, tokens});
    return r;
}

TxResult BaselineToken::approve(const Address& owner, const Address& spender, const Amount& tokens)
{
    TxResult r;
    add_abi_calldata(r, token::approve_selector, {token::to_word(spender), token::to_word(tokens)});
    store(r, allowed_, std::pair{owner, spender}, tokens);
    r.trace.logs.push_back(token::erc20_event_log);
    logs_.push_back({token::LogRecord::Kind::approval, owner, spender, tokens});
    return r;
}

TxResult BaselineToken::transfer_from(const Address& spender, const Address& from,
    const Address& to, const Amount& tokens)
{
    TxResult r;
    add_abi_calldata(r, token::transfer_from_selector,
        {token::to_word(from), token::to_word(to), token::to_word(tokens)});
    if (from == to)
    {
        r.status = TxStatus::self_transfer;
        return r;
    }
    const auto keys = key_count();
    const auto pair = std::pair{from, spender};
    const auto allowed = read(r, keys, allowed_, pair);
    if (allowed < tokens)
    {
        r.status = TxStatus::insufficient_allowance;
        return r;
    }
    const auto y1 = read(r, keys, balances_, from);
    const auto y2 = read(r, keys, balances_, to);
    if (y1 < tokens)
        r.status = TxStatus::insufficient_balance;
    else if (add_overflows(y2, tokens))
        r.status = TxStatus::overflow;
    if (!r.ok())
        return r;

    store(r, allowed_, pair, allowed - tokens);
    store(r, balances_, from, y1 - tokens);
    store(r, balances_, to, y2 + tokens);
    r.trace.logs.push_back(token::erc20_event_log);
    logs_.push_back({token::LogRecord::Kind::transfer, from, to, tokens});
    return r;
}

Amount BaselineToken::balance_of(const Address& owner) const
{
    const auto it = balances_.find(owner);
    return it == balances_.end() ? Amount{} : it->second;
}

Amount BaselineToken::allowance(const Address& owner, const Address& spender) const
{
    const auto it = allowed_.find({owner, spender});
    return it == allowed_.end() ? Amount{} : it->second;
}

std::map<Address, Amount> BaselineToken::balances() const
{
    return {balances_.begin(), balances_.end()};
}

std::map<std::pair<Address, Address>, Amount> BaselineToken::allowances() const
{
    return {allowed_.begin(), allowed_.end()};
}

Amount BaselineToken::balance_sum() const
{
    Amount sum;
    for (const auto& [_, v] : balances_)
        sum += v;
    return sum;
}
}  // namespace acctoken::baseline
