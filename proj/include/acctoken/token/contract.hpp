// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/accumulator/verify.hpp>
#include <acctoken/token/bundle.hpp>

#include <deque>

namespace acctoken::token
{
enum class AccKind : uint8_t
{
    balances = 0,
    allowed_addresses = 1,
    allowed_balances = 2,
};

inline constexpr std::size_t acc_kind_count = 3;

/// The contract's entire persistent state: three accumulator values and the supply.
struct ContractState
{
    acc::AccumulatorValue balances_acc{acc::empty_root()};
    acc::AccumulatorValue allowed_addresses_acc{acc::empty_root()};
    acc::AccumulatorValue allowed_balances_acc{acc::empty_root()};
    Amount total_supply;

    /// Storage words the contract occupies, independent of the number of accounts.
    static constexpr uint64_t persistent_words = 4;

    [[nodiscard]] const acc::AccumulatorValue& acc(AccKind k) const;
    acc::AccumulatorValue& acc(AccKind k);

    friend bool operator==(const ContractState&, const ContractState&) = default;
};

// Call arguments. Besides the ERC20 parameters, the caller states the values it claims the
// accumulated tuples hold; the bundle proves those claims.

struct TransferCall
{
    Address to;
    Amount tokens;
    Amount from_balance;
    Amount to_balance;
};

struct ApproveCall
{
    Address spender;
    Amount tokens;
    Amount old_allowance;
};

struct TransferFromCall
{
    Address from;
    Address to;
    Amount tokens;
    Amount allowance;
    Amount from_balance;
    Amount to_balance;
};

/// selector(4) || argument words(32 each) || bundle length(32) || bundle.
Bytes encode_call(const TransferCall& c, ByteView bundle);
Bytes encode_call(const ApproveCall& c, ByteView bundle);
Bytes encode_call(const TransferFromCall& c, ByteView bundle);

struct ContractConfig
{
    /// Skip belongs checks whose facts a later check_update already establishes.
    bool proof_extension = false;
    /// How many past accumulator values are remembered to tell stale proofs from bad ones.
    std::size_t stale_history = 256;
};

/// An accumulator update the contract accepted; storage must apply these in order.
struct AppliedUpdate
{
    AccKind kind = AccKind::balances;
    acc::UpdateOp op = acc::UpdateOp::add;
    acc::Element x;
    acc::AccumulatorValue after;
};

struct Execution
{
    TxStatus status = TxStatus::success;
    int failed_step = -1;
    std::vector<AppliedUpdate> updates;
    std::optional<LogRecord> log;
    HashTally hashing;
    uint32_t verifications = 0;
    std::array<bool, acc_kind_count> loaded{};
    std::array<bool, acc_kind_count> stored{};
    std::size_t proof_bytes = 0;

    [[nodiscard]] bool ok() const noexcept { return status == TxStatus::success; }
};

/// Contract side of the accumulator token. Holds only ContractState (plus a bounded,
/// non-persistent record of recent values used to classify stale proofs, the way a
/// client would consult event logs). Transactions are processed serially and atomically.
class Contract
{
public:
    explicit Contract(ContractConfig cfg = {});

    [[nodiscard]] const ContractState& state() const noexcept { return state_; }
    [[nodiscard]] const ContractConfig& config() const noexcept { return cfg_; }
    [[nodiscard]] Amount total_supply() const { return state_.total_supply; }

    /// Mints total to deployer; the witness proves adding (deployer, total) to the empty set.
    Execution deploy(const Address& deployer, const Amount& total,
        const acc::AccumulatorValue& claimed_after, ByteView add_witness);

    /// Runs one ERC20 call sent by `sender`.
    Execution execute(const Address& sender, ByteView calldata);

private:
    Execution transfer(const Address& from, const TransferCall& c, const ProofBundle& b);
    Execution approve(const Address& owner, const ApproveCall& c, const ProofBundle& b);
    Execution transfer_from(const Address& spender, const TransferFromCall& c,
        const ProofBundle& b);
    void commit(Execution& ex, const ContractState& next);

    friend class Verifier;

    ContractConfig cfg_;
    ContractState state_;
    std::array<std::deque<Digest>, acc_kind_count> recent_;
    bool deployed_ = false;
};
}  // namespace acctoken::token
