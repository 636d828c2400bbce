// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/token/ops.hpp>

namespace acctoken::token
{
std::string to_string(TxStatus s)
{
    switch (s)
    {
    case TxStatus::success:
        return "success";
    case TxStatus::insufficient_balance:
        return "insufficient_balance";
    case TxStatus::insufficient_allowance:
        return "insufficient_allowance";
    case TxStatus::not_approved:
        return "not_approved";
    case TxStatus::overflow:
        return "overflow";
    case TxStatus::self_transfer:
        return "self_transfer";
    case TxStatus::zero_supply:
        return "zero_supply";
    case TxStatus::invalid_proof:
        return "invalid_proof";
    case TxStatus::stale_proof:
        return "stale_proof";
    case TxStatus::bundle_schema_mismatch:
        return "bundle_schema_mismatch";
    case TxStatus::verification_failed:
        return "verification_failed";
    case TxStatus::unavailable:
        return "unavailable";
    }
    return "?";
}

ErrorClass error_class(TxStatus s)
{
    switch (s)
    {
    case TxStatus::success:
        return ErrorClass::accepted;
    case TxStatus::insufficient_balance:
        return ErrorClass::insufficient_balance;
    case TxStatus::insufficient_allowance:
    case TxStatus::not_approved:
        return ErrorClass::insufficient_allowance;
    case TxStatus::overflow:
        return ErrorClass::overflow;
    case TxStatus::self_transfer:
        return ErrorClass::self_transfer;
    case TxStatus::zero_supply:
        return ErrorClass::zero_supply;
    case TxStatus::invalid_proof:
    case TxStatus::stale_proof:
    case TxStatus::bundle_schema_mismatch:
        return ErrorClass::proof_rejected;
    case TxStatus::verification_failed:
    case TxStatus::unavailable:
        return ErrorClass::storage_fault;
    }
    return ErrorClass::proof_rejected;
}

std::string to_string(OpKind k)
{
    switch (k)
    {
    case OpKind::transfer:
        return "transfer";
    case OpKind::approve:
        return "approve";
    case OpKind::transfer_from:
        return "transferFrom";
    }
    return "?";
}

std::array<uint8_t, 32> to_word(const Address& a)
{
    std::array<uint8_t, 32> w{};
    std::copy(a.bytes.begin(), a.bytes.end(), w.begin() + 12);
    return w;
}
}  // namespace acctoken::token
