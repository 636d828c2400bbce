// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/storage/storage_network.hpp>
#include <acctoken/token/contract.hpp>

#include <map>
#include <set>

namespace acctoken::token
{
/// The client could not verify data served by storage.
struct VerificationFailed : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

storage::AccumulatorKind to_storage_kind(AccKind k) noexcept;

/// What a client has verified about one keyed tuple.
struct Observation
{
    bool present = false;
    Amount value;
    Bytes witness;  ///< membership, or non-membership proving the key is free
};

/// Client side: reads and proves state through the storage network against the values
/// the contract currently stores.
class Client
{
public:
    Client(storage::StorageNetwork& net, uint64_t contract_id, bool proof_extension = false)
      : net_{net}, contract_{contract_id}, proof_extension_{proof_extension}
    {}

    // These throw VerificationFailed or storage::Unavailable.
    Observation observe_balance(const ContractState& s, const Address& owner);
    Observation observe_pair(const ContractState& s, const Address& owner, const Address& spender);
    Observation observe_allowance(const ContractState& s, const Address& owner,
        const Address& spender);

    Amount balance_of(const ContractState& s, const Address& owner)
    {
        return observe_balance(s, owner).value;
    }
    Amount allowance(const ContractState& s, const Address& owner, const Address& spender);

    /// Calldata for op, or a status when the client already knows the call must fail
    /// (including verification_failed / unavailable for storage faults).
    struct Build
    {
        TxStatus status = TxStatus::success;
        Bytes calldata;
        ProofBundle bundle;
    };
    Build build(const ContractState& s, const TokenOp& op);

    [[nodiscard]] storage::AccumulatorId id(AccKind k) const { return {contract_, to_storage_kind(k)}; }

private:
    Build build_transfer(const ContractState& s, const TokenOp& op);
    Build build_approve(const ContractState& s, const TokenOp& op);
    Build build_transfer_from(const ContractState& s, const TokenOp& op);

    Observation observe_keyed(const acc::AccumulatorValue& acc, AccKind k, const acc::Element& probe,
        const std::function<std::optional<Amount>(const acc::Element&)>& value_of);

    storage::StorageNetwork& net_;
    uint64_t contract_;
    bool proof_extension_;
};

/// Contract, client and storage wired together: each operation is built by the client,
/// executed by the contract, and on success committed to storage in contract order.
class AccToken
{
public:
    AccToken(storage::StorageNetwork& net, uint64_t contract_id, ContractConfig cfg = {});

    TxStatus deploy(const Address& deployer, const Amount& total);

    TxResult execute(const TokenOp& op);
    TxResult transfer(const Address& from, const Address& to, const Amount& tokens)
    {
        return execute(TokenOp::transfer(from, to, tokens));
    }
    TxResult approve(const Address& owner, const Address& spender, const Amount& tokens)
    {
        return execute(TokenOp::approve(owner, spender, tokens));
    }
    TxResult transfer_from(const Address& spender, const Address& from, const Address& to,
        const Amount& tokens)
    {
        return execute(TokenOp::transfer_from(spender, from, to, tokens));
    }

    /// Submits prepared calldata directly (for tamper and staleness tests).
    TxResult submit(const Address& sender, ByteView calldata);

    // Client-side, verified reads.
    Amount balance_of(const Address& owner) { return client_.balance_of(state(), owner); }
    Amount allowance(const Address& owner, const Address& spender)
    {
        return client_.allowance(state(), owner, spender);
    }

    [[nodiscard]] const ContractState& state() const noexcept { return contract_.state(); }
    [[nodiscard]] Amount total_supply() const { return contract_.total_supply(); }
    [[nodiscard]] const Contract& contract() const noexcept { return contract_; }
    Client& client() noexcept { return client_; }
    [[nodiscard]] const std::vector<LogRecord>& logs() const noexcept { return logs_; }

    /// Updates committed by the most recent accepted call.
    [[nodiscard]] const std::vector<AppliedUpdate>& last_updates() const noexcept
    {
        return last_updates_;
    }

    // Trusted views over storage, for invariants and oracle comparisons.
    [[nodiscard]] std::map<Address, Amount> balances() const;
    [[nodiscard]] std::map<std::pair<Address, Address>, Amount> allowances() const;
    [[nodiscard]] std::set<std::pair<Address, Address>> approved_pairs() const;
    [[nodiscard]] Amount balance_sum() const;
    [[nodiscard]] std::optional<Amount> stored_balance(const Address& owner) const;
    [[nodiscard]] std::optional<Amount> stored_allowance(const Address& owner,
        const Address& spender) const;

private:
    storage::StorageNetwork& net_;
    uint64_t id_;
    Contract contract_;
    Client client_;
    std::vector<LogRecord> logs_;
    std::vector<AppliedUpdate> last_updates_;
};
}  // namespace acctoken::token
