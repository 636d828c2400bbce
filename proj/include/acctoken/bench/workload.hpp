// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/storage/storage_network.hpp>
#include <acctoken/token/contract.hpp>

#include <map>

namespace acctoken::bench
{
using token::Address;
using token::Amount;

struct WorkloadSpec
{
    std::size_t accounts = 100;
    std::size_t ops = 1000;
    uint64_t seed = 1;
    uint64_t supply = 1'000'000;
};

/// Random ERC20 calls over a fixed set of accounts. accounts[0] deploys with the whole
/// supply. The mix includes zero amounts, overdrafts, self transfers and unapproved spends.
struct Workload
{
    std::vector<Address> accounts;
    Amount supply;
    std::vector<token::TokenOp> ops;
};

Workload random_workload(const WorkloadSpec& spec);

using BalanceMap = std::map<Address, Amount>;
using AllowanceMap = std::map<std::pair<Address, Address>, Amount>;

/// Final state and per-call outcomes of running a workload on one token.
struct RunLog
{
    std::vector<token::TxStatus> statuses;
    BalanceMap balances;      ///< zero entries dropped
    AllowanceMap allowances;  ///< zero entries dropped
    uint64_t accepted = 0;
    bool conserved = true;       ///< balance sum equalled supply after every accepted call
    bool constant_state = true;  ///< every accumulator-token storage access saw 4 words
};

RunLog run_baseline(const Workload& w);
RunLog run_acc_token(const Workload& w, const storage::FaultPolicy& policy = {},
    const token::ContractConfig& cfg = {});

/// Same workload without the calls at the given positions.
Workload without(const Workload& w, const std::vector<std::size_t>& drop);

/// Describes the first difference, or returns an empty string.
std::string compare_state(const RunLog& a, const RunLog& b);
std::string compare_verdicts(const RunLog& a, const RunLog& b);
}  // namespace acctoken::bench
