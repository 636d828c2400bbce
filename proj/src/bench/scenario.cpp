// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/baseline/baseline_token.hpp>
#include <acctoken/bench/scenario.hpp>
#include <acctoken/token/acc_token.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace acctoken::bench
{
using token::Address;
using token::Amount;
using token::OpKind;
using token::TokenOp;
using token::TxResult;

std::string to_string(TokenKind t)
{
    return t == TokenKind::acc ? "acc" : "baseline";
}

TokenKind parse_token_kind(std::string_view s)
{
    if (s == "acc")
        return TokenKind::acc;
    if (s == "baseline")
        return TokenKind::baseline;
    throw std::invalid_argument{"token must be acc or baseline"};
}

OpKind parse_op(std::string_view s)
{
    for (const auto k : {OpKind::transfer, OpKind::approve, OpKind::transfer_from})
    {
        if (token::to_string(k) == s)
            return k;
    }
    throw std::invalid_argument{"unknown op: " + std::string{s}};
}

void PopulationSpec::validate() const
{
    if (checkpoints.empty())
        throw std::invalid_argument{"at least one checkpoint is required"};
    if (checkpoints.front() < 4)
        throw std::invalid_argument{"checkpoints must be at least 4 accounts"};
    for (std::size_t i = 1; i < checkpoints.size(); ++i)
    {
        if (checkpoints[i] <= checkpoints[i - 1])
            throw std::invalid_argument{"checkpoints must be strictly increasing"};
    }
    if (samples == 0)
        throw std::invalid_argument{"samples must be positive"};
    fault.validate();
}

namespace
{
/// Both tokens plus the running checks applied to every call.
class Lockstep
{
public:
    Lockstep(const PopulationSpec& spec, PopulationReport& report)
      : spec_{spec},
        report_{report},
        acc_{net_, 1, token::ContractConfig{spec.proof_extension}},
        supply_{Amount{1} << 128}
    {
        const auto deployer = Address::derive(0);
        if (acc_.deploy(deployer, supply_) != token::TxStatus::success ||
            base_.deploy(deployer, supply_) != token::TxStatus::success)
            throw std::logic_error{"deployment failed"};
        stored_sum_ = supply_;
        net_.set_policy(spec.fault);
    }

    /// Runs op on both tokens. Storage faults are retried with a fresh bundle.
    std::pair<TxResult, TxResult> run(const TokenOp& op)
    {
        TxResult a = acc_.execute(op);
        for (std::size_t attempt = 0; token::is_fault(a.status); ++attempt)
        {
            if (attempt == spec_.max_retries)
                throw std::runtime_error{"storage faults persisted through every retry (" +
                                         token::to_string(a.status) + ")"};
            ++report_.retries;
            a = acc_.execute(op);
        }
        TxResult b = base_.execute(op);

        if (token::error_class(a.status) != token::error_class(b.status))
            mismatch("verdicts differ: " + token::to_string(a.status) + " vs " +
                     token::to_string(b.status));
        for (const auto& s : a.trace.storage)
            report_.constant_state = report_.constant_state && s.contract_keys == 4;
        if (a.ok())
        {
            ++report_.transactions;
            check_conservation();
            check_touched(op);
        }
        return {std::move(a), std::move(b)};
    }

    void full_recount()
    {
        const auto acc_sum = acc_.balance_sum();
        if (acc_sum != supply_ || base_.balance_sum() != supply_ || acc_sum != stored_sum_)
        {
            report_.conserved = false;
            note("balance sum differs from total supply");
        }
    }

    [[nodiscard]] Amount balance(uint64_t i) const { return base_.balance_of(Address::derive(i)); }
    [[nodiscard]] Amount allowance(uint64_t i, uint64_t j) const
    {
        return base_.allowance(Address::derive(i), Address::derive(j));
    }

private:
    void note(const std::string& what)
    {
        if (report_.first_error.empty())
            report_.first_error = what;
    }

    void mismatch(const std::string& what)
    {
        report_.shadow_ok = false;
        note(what);
    }

    void check_conservation()
    {
        Amount added;
        Amount removed;
        for (const auto& u : acc_.last_updates())
        {
            if (u.kind != token::AccKind::balances)
                continue;
            const auto amount = token::parse_balance(u.x).value().amount;
            (u.op == acc::UpdateOp::add ? added : removed) += amount;
        }
        stored_sum_ = stored_sum_ + added - removed;
        if (stored_sum_ != acc_.total_supply())
        {
            report_.conserved = false;
            note("accumulated balances no longer sum to the total supply");
        }
    }

    void check_touched(const TokenOp& op)
    {
        const auto same = [](const std::optional<Amount>& a, const Amount& b) {
            return a.value_or(0) == b;
        };
        if (op.kind == OpKind::approve)
        {
            if (!same(acc_.stored_allowance(op.from, op.to), base_.allowance(op.from, op.to)))
                mismatch("allowances diverged");
            return;
        }
        if (!same(acc_.stored_balance(op.from), base_.balance_of(op.from)) ||
            !same(acc_.stored_balance(op.to), base_.balance_of(op.to)))
            mismatch("balances diverged");
        if (op.kind == OpKind::transfer_from &&
            !same(acc_.stored_allowance(op.from, op.sender), base_.allowance(op.from, op.sender)))
            mismatch("allowances diverged");
    }

    const PopulationSpec& spec_;
    PopulationReport& report_;
    storage::StorageNetwork net_;
    token::AccToken acc_;
    baseline::BaselineToken base_;
    Amount supply_;
    Amount stored_sum_;
};

Sample sample_of(OpKind op, const TxResult& r)
{
    return {op, r.trace, r.proof_bytes, r.verifications};
}
}  // namespace

PopulationReport run_population(const PopulationSpec& spec, const Progress& progress)
{
    spec.validate();
    PopulationReport report;
    Lockstep ls{spec, report};
    std::mt19937_64 rng{spec.seed};
    const auto addr = [](uint64_t i) { return Address::derive(i); };

    uint64_t accounts = 1;  // the deployer
    std::set<std::pair<uint64_t, uint64_t>> sampled_pairs;

    const auto expect_ok = [&](const std::pair<TxResult, TxResult>& r, const char* what) {
        if (!r.first.ok() || !r.second.ok())
            throw std::logic_error{std::string{what} + " was rejected: " +
                                   token::to_string(r.first.status) + " / " +
                                   token::to_string(r.second.status)};
    };

    for (const auto target : spec.checkpoints)
    {
        while (accounts < target)
        {
            const auto i = accounts++;
            expect_ok(ls.run(TokenOp::transfer(addr(0), addr(i), 1)), "growth transfer");
            if (i >= 2)
                expect_ok(ls.run(TokenOp::approve(addr(i - 1), addr(i), 1)), "growth approve");
            if (progress && i % 4096 == 0)
                progress(accounts, target);
        }
        ls.full_recount();

        CheckpointSamples cp;
        cp.n = accounts;
        const auto random_account = [&] { return 1 + rng() % (accounts - 1); };
        const auto funded = [&](uint64_t i) { return ls.balance(i) >= 1; };
        const auto pick = [&](auto&& ok) {
            for (int tries = 0; tries < 100'000; ++tries)
            {
                if (const auto i = random_account(); ok(i))
                    return i;
            }
            throw std::runtime_error{"population too small for the requested samples"};
        };

        for (std::size_t s = 0; s < spec.samples; ++s)
        {
            const auto j = pick(funded);
            const auto k = pick([&](uint64_t x) { return x != j && funded(x); });
            const auto r = ls.run(TokenOp::transfer(addr(j), addr(k), 1));
            expect_ok(r, "sampled transfer");
            cp.acc.push_back(sample_of(OpKind::transfer, r.first));
            cp.baseline.push_back(sample_of(OpKind::transfer, r.second));
        }
        for (std::size_t s = 0; s < spec.samples; ++s)
        {
            uint64_t j = 0;
            const auto k = pick([&](uint64_t x) {
                j = random_account();
                return x != j && x != j + 1 && !sampled_pairs.contains({j, x});
            });
            sampled_pairs.insert({j, k});
            const auto r = ls.run(TokenOp::approve(addr(j), addr(k), 1));
            expect_ok(r, "sampled approve");
            cp.acc.push_back(sample_of(OpKind::approve, r.first));
            cp.baseline.push_back(sample_of(OpKind::approve, r.second));
        }
        for (std::size_t s = 0; s < spec.samples; ++s)
        {
            const auto i = pick([&](uint64_t x) {
                return x + 1 < accounts && funded(x) && ls.allowance(x, x + 1) >= 1;
            });
            const auto to = pick([&](uint64_t x) { return x != i && funded(x); });
            const auto r = ls.run(TokenOp::transfer_from(addr(i + 1), addr(i), addr(to), 1));
            expect_ok(r, "sampled transferFrom");
            cp.acc.push_back(sample_of(OpKind::transfer_from, r.first));
            cp.baseline.push_back(sample_of(OpKind::transfer_from, r.second));
        }
        ls.full_recount();
        report.checkpoints.push_back(std::move(cp));
        if (progress)
            progress(accounts, target);
    }
    return report;
}

double percentile(std::vector<uint64_t> values, double p)
{
    if (values.empty())
        throw std::invalid_argument{"percentile of an empty sample"};
    std::sort(values.begin(), values.end());
    const auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(values.size())));
    return static_cast<double>(values[std::clamp<std::size_t>(rank, 1, values.size()) - 1]);
}

std::vector<ResultRow> summarize(const PopulationReport& r, TokenKind token,
    const gas::GasSchedule& schedule)
{
    std::vector<ResultRow> rows;
    for (const auto& cp : r.checkpoints)
    {
        const auto& samples = token == TokenKind::acc ? cp.acc : cp.baseline;
        for (const auto op : {OpKind::transfer, OpKind::approve, OpKind::transfer_from})
        {
            std::vector<uint64_t> gas;
            double bytes = 0;
            double verifications = 0;
            for (const auto& s : samples)
            {
                if (s.op != op)
                    continue;
                gas.push_back(gas::meter_transaction(schedule, s.trace).total);
                bytes += static_cast<double>(s.proof_bytes);
                verifications += s.verifications;
            }
            if (gas.empty())
                continue;
            const auto count = static_cast<double>(gas.size());
            double sum = 0;
            for (const auto g : gas)
                sum += static_cast<double>(g);
            rows.push_back({cp.n, op, sum / count, percentile(gas, 0.95), bytes / count,
                verifications / count});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
        const auto oa = token::to_string(a.op);
        const auto ob = token::to_string(b.op);
        return oa != ob ? oa < ob : a.n < b.n;
    });
    return rows;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows)
{
    out << csv_header << '\n';
    for (const auto& r : rows)
    {
        std::array<char, 256> line{};
        std::snprintf(line.data(), line.size(), "%llu,%s,%.2f,%.0f,%.2f,%.2f\n",
            static_cast<unsigned long long>(r.n), token::to_string(r.op).c_str(), r.gas_mean,
            r.gas_p95, r.proof_bytes_mean, r.verifications);
        out << line.data();
    }
}

std::vector<ResultRow> read_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != csv_header)
        throw std::invalid_argument{"missing or unexpected CSV header"};
    std::vector<ResultRow> rows;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::stringstream ss{line};
        for (std::string cell; std::getline(ss, cell, ',');)
            f.push_back(cell);
        if (f.size() != 6)
            throw std::invalid_argument{"malformed CSV row: " + line};
        ResultRow r;
        r.n = gas::parse_u64(f[0]);
        r.op = parse_op(f[1]);
        r.gas_mean = gas::parse_double(f[2]);
        r.gas_p95 = gas::parse_double(f[3]);
        r.proof_bytes_mean = gas::parse_double(f[4]);
        r.verifications = gas::parse_double(f[5]);
        rows.push_back(r);
    }
    return rows;
}

std::vector<ComparisonRow> compare(const std::vector<ResultRow>& a, const std::vector<ResultRow>& b)
{
    std::map<std::pair<std::string, uint64_t>, const ResultRow*> by_key;
    for (const auto& r : b)
        by_key[{token::to_string(r.op), r.n}] = &r;
    if (a.size() != b.size() || by_key.size() != b.size())
        throw std::invalid_argument{"result sets have different rows"};

    std::vector<ComparisonRow> out;
    for (const auto& r : a)
    {
        const auto it = by_key.find({token::to_string(r.op), r.n});
        if (it == by_key.end())
            throw std::invalid_argument{"no matching row for " + token::to_string(r.op) + " at n=" +
                                        std::to_string(r.n)};
        const auto& other = *it->second;
        out.push_back({r.n, r.op, r.gas_mean, other.gas_mean,
            other.gas_mean == 0 ? 0.0 : r.gas_mean / other.gas_mean});
    }
    return out;
}

void write_comparison(std::ostream& out, const std::vector<ComparisonRow>& rows)
{
    out << "n,op,gas_a,gas_b,ratio\n";
    for (const auto& r : rows)
    {
        std::array<char, 256> line{};
        std::snprintf(line.data(), line.size(), "%llu,%s,%.2f,%.2f,%.4f\n",
            static_cast<unsigned long long>(r.n), token::to_string(r.op).c_str(), r.gas_a, r.gas_b,
            r.ratio);
        out << line.data();
    }
}

LogFit fit_log2(const std::vector<std::pair<double, double>>& points)
{
    if (points.size() < 2)
        throw std::invalid_argument{"a fit needs at least two points"};
    const auto n = static_cast<double>(points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [count, y] : points)
    {
        const double x = std::log2(count);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    LogFit f;
    const double denom = n * sxx - sx * sx;
    if (denom == 0)
        throw std::invalid_argument{"a fit needs at least two distinct n"};
    f.slope = (n * sxy - sx * sy) / denom;
    f.intercept = (sy - f.slope * sx) / n;
    const double mean = sy / n;
    double ss_tot = 0, ss_res = 0;
    for (const auto& [count, y] : points)
    {
        const double e = y - (f.slope * std::log2(count) + f.intercept);
        ss_res += e * e;
        ss_tot += (y - mean) * (y - mean);
    }
    f.r2 = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return f;
}
}  // namespace acctoken::bench
