// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/gas/meter.hpp>
#include <acctoken/token/types.hpp>

#include <string>

// Vocabulary shared by both token implementations and the bench harness.

namespace acctoken::token
{
enum class TxStatus : uint8_t
{
    success,
    insufficient_balance,
    insufficient_allowance,
    not_approved,
    overflow,
    self_transfer,
    zero_supply,
    invalid_proof,
    stale_proof,
    bundle_schema_mismatch,
    verification_failed,  ///< the client could not verify what storage sent it
    unavailable,
};

std::string to_string(TxStatus s);

/// Coarse outcome used when comparing the two tokens: statuses that mean the same thing
/// to an ERC20 caller map to the same class.
enum class ErrorClass : uint8_t
{
    accepted,
    insufficient_balance,
    insufficient_allowance,  ///< includes not_approved
    overflow,
    self_transfer,
    zero_supply,
    proof_rejected,     ///< invalid_proof, stale_proof, bundle_schema_mismatch
    storage_fault,      ///< verification_failed, unavailable
};

ErrorClass error_class(TxStatus s);

/// True for outcomes caused by bad proofs or bad storage rather than by token rules.
inline bool is_fault(TxStatus s)
{
    const auto c = error_class(s);
    return c == ErrorClass::proof_rejected || c == ErrorClass::storage_fault;
}

enum class OpKind : uint8_t
{
    transfer,
    approve,
    transfer_from,
};

std::string to_string(OpKind k);

/// One ERC20 call. transfer: sender moves to `to`. approve: sender allows `to` to spend.
/// transfer_from: sender spends `from`'s allowance, moving tokens to `to`.
struct TokenOp
{
    OpKind kind = OpKind::transfer;
    Address sender;
    Address from;
    Address to;
    Amount tokens;

    static TokenOp transfer(const Address& from, const Address& to, const Amount& tokens)
    {
        return {OpKind::transfer, from, from, to, tokens};
    }
    static TokenOp approve(const Address& owner, const Address& spender, const Amount& tokens)
    {
        return {OpKind::approve, owner, owner, spender, tokens};
    }
    static TokenOp transfer_from(const Address& spender, const Address& from, const Address& to,
        const Amount& tokens)
    {
        return {OpKind::transfer_from, spender, from, to, tokens};
    }
};

struct LogRecord
{
    enum class Kind : uint8_t
    {
        transfer,
        approval,
    };
    Kind kind = Kind::transfer;
    Address a;
    Address b;
    Amount amount;

    friend bool operator==(const LogRecord&, const LogRecord&) = default;
};

/// ERC20 events are LOG3 with a 32-byte amount.
inline constexpr gas::LogEntry erc20_event_log{3, 32};

struct TxResult
{
    TxStatus status = TxStatus::success;
    gas::TxTrace trace;
    std::size_t proof_bytes = 0;    ///< serialized bundle length (0 for the baseline)
    uint32_t verifications = 0;     ///< belongs + check_update calls run by the contract
    int failed_step = -1;           ///< bundle entry that failed, for proof rejections

    [[nodiscard]] bool ok() const noexcept { return status == TxStatus::success; }
};

// ERC20 function selectors.
inline constexpr std::array<uint8_t, 4> transfer_selector{0xa9, 0x05, 0x9c, 0xbb};
inline constexpr std::array<uint8_t, 4> approve_selector{0x09, 0x5e, 0xa7, 0xb3};
inline constexpr std::array<uint8_t, 4> transfer_from_selector{0x23, 0xb8, 0x72, 0xdd};

/// Address as a left-padded 32-byte ABI word.
std::array<uint8_t, 32> to_word(const Address& a);
}  // namespace acctoken::token
