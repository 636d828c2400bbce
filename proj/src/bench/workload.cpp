// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/baseline/baseline_token.hpp>
#include <acctoken/bench/workload.hpp>
#include <acctoken/token/acc_token.hpp>

#include <random>
#include <sstream>

namespace acctoken::bench
{
Workload random_workload(const WorkloadSpec& spec)
{
    if (spec.accounts < 2)
        throw std::invalid_argument{"a workload needs at least two accounts"};
    Workload w;
    w.supply = spec.supply;
    for (std::size_t i = 0; i < spec.accounts; ++i)
        w.accounts.push_back(Address::derive(i));

    std::mt19937_64 rng{spec.seed};
    auto pick = [&] { return w.accounts[rng() % w.accounts.size()]; };
    auto amount = [&]() -> Amount {
        const auto r = rng() % 100;
        if (r < 8)
            return 0;
        if (r < 13)
            return rng() % (spec.supply + 1);  // usually an overdraft
        return 1 + rng() % 500;
    };

    for (std::size_t i = 0; i < spec.ops; ++i)
    {
        // The deployer sends a quarter of the transfers so funds spread out.
        auto a = rng() % 4 == 0 ? w.accounts[0] : pick();
        auto b = rng() % 50 == 0 ? a : pick();
        const auto r = rng() % 10;
        if (r < 4)
        {
            w.ops.push_back(token::TokenOp::transfer(a, b, amount()));
        }
        else if (r < 7)
        {
            w.ops.push_back(token::TokenOp::approve(a, b, amount()));
        }
        else
        {
            const auto to = rng() % 50 == 0 ? a : pick();
            w.ops.push_back(token::TokenOp::transfer_from(b, a, to, amount()));
        }
    }
    return w;
}

namespace
{
template <typename Map>
Map nonzero(Map m)
{
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
}
}  // namespace

RunLog run_baseline(const Workload& w)
{
    baseline::BaselineToken t;
    t.deploy(w.accounts[0], w.supply);
    RunLog log;
    for (const auto& op : w.ops)
    {
        const auto r = t.execute(op);
        log.statuses.push_back(r.status);
        if (r.ok())
        {
            ++log.accepted;
            log.conserved = log.conserved && t.balance_sum() == t.total_supply();
        }
    }
    log.balances = nonzero(t.balances());
    log.allowances = nonzero(t.allowances());
    return log;
}

RunLog run_acc_token(const Workload& w, const storage::FaultPolicy& policy,
    const token::ContractConfig& cfg)
{
    storage::StorageNetwork net;
    token::AccToken t{net, 1, cfg};
    t.deploy(w.accounts[0], w.supply);
    net.set_policy(policy);

    RunLog log;
    for (const auto& op : w.ops)
    {
        const auto r = t.execute(op);
        log.statuses.push_back(r.status);
        for (const auto& a : r.trace.storage)
            log.constant_state = log.constant_state && a.contract_keys == 4;
        if (r.ok())
        {
            ++log.accepted;
            log.conserved = log.conserved && t.balance_sum() == t.total_supply();
        }
    }
    log.balances = nonzero(t.balances());
    log.allowances = nonzero(t.allowances());
    return log;
}

Workload without(const Workload& w, const std::vector<std::size_t>& drop)
{
    Workload out = w;
    out.ops.clear();
    std::size_t d = 0;
    for (std::size_t i = 0; i < w.ops.size(); ++i)
    {
        if (d < drop.size() && drop[d] == i)
        {
            ++d;
            continue;
        }
        out.ops.push_back(w.ops[i]);
    }
    return out;
}

std::string compare_state(const RunLog& a, const RunLog& b)
{
    std::ostringstream out;
    if (a.balances.size() != b.balances.size())
        out << "balance maps differ in size (" << a.balances.size() << " vs " << b.balances.size()
            << ")";
    else if (a.balances != b.balances)
        out << "balance maps differ";
    else if (a.allowances.size() != b.allowances.size())
        out << "allowance maps differ in size (" << a.allowances.size() << " vs "
            << b.allowances.size() << ")";
    else if (a.allowances != b.allowances)
        out << "allowance maps differ";
    return out.str();
}

std::string compare_verdicts(const RunLog& a, const RunLog& b)
{
    if (a.statuses.size() != b.statuses.size())
        return "different number of calls";
    for (std::size_t i = 0; i < a.statuses.size(); ++i)
    {
        if (token::error_class(a.statuses[i]) != token::error_class(b.statuses[i]))
            return "call " + std::to_string(i) + ": " + token::to_string(a.statuses[i]) + " vs " +
                   token::to_string(b.statuses[i]);
    }
    return {};
}
}  // namespace acctoken::bench
