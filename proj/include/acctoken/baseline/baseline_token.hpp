// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/token/ops.hpp>

#include <map>
#include <unordered_map>

namespace acctoken::baseline
{
using token::Address;
using token::Amount;
using token::TokenOp;
using token::TxResult;
using token::TxStatus;

/// Mapping-based ERC20 that keeps balances and allowances directly in contract storage.
///
/// Each map entry is one storage key; entries that reach zero are deleted. Every call
/// reports its storage accesses so the gas model can price them.
class BaselineToken
{
public:
    TxStatus deploy(const Address& deployer, const Amount& total);

    TxResult execute(const TokenOp& op);
    TxResult transfer(const Address& from, const Address& to, const Amount& tokens);
    TxResult approve(const Address& owner, const Address& spender, const Amount& tokens);
    TxResult transfer_from(const Address& spender, const Address& from, const Address& to,
        const Amount& tokens);

    [[nodiscard]] Amount balance_of(const Address& owner) const;
    [[nodiscard]] Amount allowance(const Address& owner, const Address& spender) const;
    [[nodiscard]] Amount total_supply() const { return total_supply_; }

    /// Storage keys in use: |balances| + |allowed|.
    [[nodiscard]] uint64_t key_count() const noexcept { return balances_.size() + allowed_.size(); }
    [[nodiscard]] std::size_t account_count() const noexcept { return balances_.size(); }

    [[nodiscard]] std::map<Address, Amount> balances() const;
    [[nodiscard]] std::map<std::pair<Address, Address>, Amount> allowances() const;
    [[nodiscard]] Amount balance_sum() const;
    [[nodiscard]] const std::vector<token::LogRecord>& logs() const noexcept { return logs_; }

private:
    /// Writes v under key (deleting it at zero) and records the access.
    template <typename Map, typename Key>
    void store(TxResult& r, Map& m, const Key& key, const Amount& v);

    std::unordered_map<Address, Amount, token::AddressHash> balances_;
    std::unordered_map<std::pair<Address, Address>, Amount, token::AddressPairHash> allowed_;
    Amount total_supply_;
    std::vector<token::LogRecord> logs_;
};
}  // namespace acctoken::baseline
