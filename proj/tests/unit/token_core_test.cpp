// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/baseline/baseline_token.hpp>
#include <acctoken/bench/workload.hpp>
#include <acctoken/token/acc_token.hpp>

#include <gtest/gtest.h>

using namespace acctoken;
using namespace acctoken::token;
using storage::FaultPolicy;
using storage::StorageNetwork;

namespace
{
const Address A = Address::derive(1);
const Address B = Address::derive(2);
const Address C = Address::derive(3);
const Address S = Address::derive(4);

struct Fixture : ::testing::Test
{
    StorageNetwork net;
    AccToken token{net, 1};

    void SetUp() override { ASSERT_EQ(token.deploy(A, 1000), TxStatus::success); }

    struct Snapshot
    {
        ContractState state;
        std::map<Address, Amount> balances;
        std::map<std::pair<Address, Address>, Amount> allowances;
        std::set<std::pair<Address, Address>> pairs;

        bool operator==(const Snapshot&) const = default;
    };

    Snapshot snapshot() const
    {
        return {token.state(), token.balances(), token.allowances(), token.approved_pairs()};
    }

    Client::Build build(const TokenOp& op) { return token.client().build(token.state(), op); }
};

struct Counts
{
    std::size_t membership;
    std::size_t update;
};

Counts counts(const ProofBundle& b)
{
    return {b.count(false), b.count(true)};
}

std::vector<Purpose> purposes(const ProofBundle& b)
{
    std::vector<Purpose> out;
    for (const auto& e : b.entries)
        out.push_back(e.purpose);
    return out;
}
}  // namespace

TEST_F(Fixture, deploy_and_reads)
{
    EXPECT_EQ(token.total_supply(), 1000);
    EXPECT_EQ(token.balance_of(A), 1000);
    EXPECT_EQ(token.balance_of(B), 0);
    EXPECT_EQ(token.allowance(A, S), 0);
    EXPECT_EQ(token.balances().size(), 1u);

    StorageNetwork other;
    AccToken zero{other, 1};
    EXPECT_EQ(zero.deploy(A, 0), TxStatus::zero_supply);
}

TEST_F(Fixture, transfer_to_fresh_then_existing_account)
{
    const auto fresh = build(TokenOp::transfer(A, B, 300));
    ASSERT_EQ(fresh.status, TxStatus::success);
    EXPECT_EQ(purposes(fresh.bundle),
        (std::vector{Purpose::from_member, Purpose::to_absent, Purpose::del_from, Purpose::add_from,
            Purpose::add_to}));
    const auto r = token.submit(A, fresh.calldata);
    ASSERT_TRUE(r.ok()) << to_string(r.status);
    EXPECT_EQ(token.balance_of(A), 700);
    EXPECT_EQ(token.balance_of(B), 300);
    EXPECT_EQ(token.balance_sum(), token.total_supply());
    EXPECT_EQ(token.total_supply(), 1000);

    const auto again = build(TokenOp::transfer(A, B, 100));
    EXPECT_EQ(counts(again.bundle).membership, 2u);
    EXPECT_EQ(counts(again.bundle).update, 4u);
    ASSERT_TRUE(token.submit(A, again.calldata).ok());
    EXPECT_EQ(token.balance_of(A), 600);
    EXPECT_EQ(token.balance_of(B), 400);
    EXPECT_EQ(token.logs().back(), (LogRecord{LogRecord::Kind::transfer, A, B, 100}));
}

TEST_F(Fixture, insufficient_balance_leaves_state)
{
    const auto before = snapshot();
    EXPECT_EQ(token.transfer(A, B, 1001).status, TxStatus::insufficient_balance);
    EXPECT_EQ(snapshot(), before);

    // The contract reaches the same verdict on a well-proven call asking for too much.
    const auto b = build(TokenOp::transfer(A, B, 10));
    const auto call = encode_call(TransferCall{B, 1001, 1000, 0}, b.bundle.encode());
    EXPECT_EQ(token.submit(A, call).status, TxStatus::insufficient_balance);
    EXPECT_EQ(snapshot(), before);
}

TEST_F(Fixture, tampered_witness_is_invalid_proof)
{
    const auto b = build(TokenOp::transfer(A, B, 300));
    const auto before = snapshot();
    // Flip one byte of the first witness's element digest.
    auto call = b.calldata;
    const std::size_t bundle_start = 4 + 32 * 5;
    call[bundle_start + 2 + 1 + 5] ^= 0x01;
    const auto r = token.submit(A, call);
    EXPECT_EQ(r.status, TxStatus::invalid_proof);
    EXPECT_EQ(r.failed_step, 0);
    EXPECT_EQ(snapshot(), before);
}

TEST_F(Fixture, every_single_byte_tamper_is_rejected_atomically)
{
    ASSERT_TRUE(token.transfer(A, B, 300).ok());
    ASSERT_TRUE(token.approve(A, S, 50).ok());
    const std::vector<TokenOp> ops{TokenOp::transfer(A, B, 10), TokenOp::transfer(B, C, 10),
        TokenOp::approve(A, S, 20), TokenOp::approve(B, S, 5),
        TokenOp::transfer_from(S, A, C, 7)};
    for (const auto& op : ops)
    {
        const auto b = build(op);
        ASSERT_EQ(b.status, TxStatus::success);
        const auto before = snapshot();
        for (std::size_t i = 0; i < b.calldata.size(); ++i)
        {
            for (const uint8_t mask : {0x01, 0x80})
            {
                auto call = b.calldata;
                call[i] ^= mask;
                const auto r = token.submit(op.sender, call);
                ASSERT_FALSE(r.ok()) << to_string(op.kind) << " byte " << i;
            }
        }
        EXPECT_EQ(snapshot(), before);
        EXPECT_TRUE(token.submit(op.sender, b.calldata).ok());
    }
}

TEST_F(Fixture, wrong_sender_is_rejected)
{
    const auto b = build(TokenOp::transfer(A, B, 10));
    EXPECT_EQ(token.submit(C, b.calldata).status, TxStatus::invalid_proof);
}

TEST_F(Fixture, approve_first_time_and_replace)
{
    const auto first = build(TokenOp::approve(A, S, 50));
    EXPECT_EQ(purposes(first.bundle),
        (std::vector{Purpose::pair_absent, Purpose::add_pair, Purpose::add_allowance}));
    ASSERT_TRUE(token.submit(A, first.calldata).ok());
    EXPECT_EQ(token.allowance(A, S), 50);

    const auto again = build(TokenOp::approve(A, S, 20));
    EXPECT_EQ(purposes(again.bundle),
        (std::vector{Purpose::pair_member, Purpose::del_allowance, Purpose::add_allowance}));
    ASSERT_TRUE(token.submit(A, again.calldata).ok());
    EXPECT_EQ(token.allowance(A, S), 20);
    EXPECT_EQ(token.logs().back(), (LogRecord{LogRecord::Kind::approval, A, S, 20}));
}

TEST_F(Fixture, approve_with_membership_claim_for_absent_pair)
{
    // Re-approve layout, but the "membership" entry carries the pair's absence proof.
    auto b = build(TokenOp::approve(A, S, 50)).bundle;
    ASSERT_EQ(b.entries[0].purpose, Purpose::pair_absent);
    b.entries[0].purpose = Purpose::pair_member;
    b.entries.erase(b.entries.begin() + 1);
    const auto before = snapshot();
    const auto r = token.submit(A, encode_call(ApproveCall{S, 50, 0}, b.encode()));
    EXPECT_EQ(r.status, TxStatus::invalid_proof);
    EXPECT_EQ(r.failed_step, 0);
    EXPECT_EQ(snapshot(), before);
}

TEST_F(Fixture, approve_zero_removes_allowance_keeps_pair)
{
    ASSERT_TRUE(token.approve(A, S, 50).ok());
    ASSERT_TRUE(token.approve(A, S, 0).ok());
    EXPECT_EQ(token.allowance(A, S), 0);
    EXPECT_TRUE(token.allowances().empty());
    EXPECT_EQ(token.approved_pairs().count({A, S}), 1u);
    ASSERT_TRUE(token.approve(A, S, 5).ok());
    EXPECT_EQ(token.allowance(A, S), 5);
}

TEST_F(Fixture, transfer_from_spends_allowance)
{
    ASSERT_TRUE(token.approve(A, S, 50).ok());
    ASSERT_TRUE(token.transfer(A, B, 1).ok());  // B now has a tuple
    const auto b = build(TokenOp::transfer_from(S, A, B, 20));
    ASSERT_EQ(b.status, TxStatus::success);
    EXPECT_EQ(counts(b.bundle).membership, 4u);
    EXPECT_EQ(counts(b.bundle).update, 6u);
    const auto r = token.submit(S, b.calldata);
    ASSERT_TRUE(r.ok()) << to_string(r.status);
    EXPECT_EQ(r.verifications, 10u);
    EXPECT_EQ(token.balance_of(A), 979);
    EXPECT_EQ(token.balance_of(B), 21);
    EXPECT_EQ(token.allowance(A, S), 30);

    EXPECT_EQ(token.transfer_from(S, A, B, 60).status, TxStatus::insufficient_allowance);
    EXPECT_EQ(token.transfer_from(C, A, B, 1).status, TxStatus::not_approved);

    // Contract-side: honest proofs of allowance 30, asking for 31.
    const auto ok = build(TokenOp::transfer_from(S, A, B, 1));
    const auto call = encode_call(TransferFromCall{A, B, 31, 30, 979, 21}, ok.bundle.encode());
    EXPECT_EQ(token.submit(S, call).status, TxStatus::insufficient_allowance);
}

TEST_F(Fixture, transfer_from_to_zero_allowance_keeps_triple)
{
    ASSERT_TRUE(token.approve(A, S, 5).ok());
    ASSERT_TRUE(token.transfer_from(S, A, C, 5).ok());
    EXPECT_EQ(token.allowance(A, S), 0);
    EXPECT_EQ(token.allowances().at({A, S}), 0);
    EXPECT_EQ(token.transfer_from(S, A, C, 1).status, TxStatus::insufficient_allowance);
    ASSERT_TRUE(token.transfer_from(S, A, C, 0).ok());
}

TEST_F(Fixture, zero_amounts_and_self_transfer)
{
    ASSERT_TRUE(token.transfer(A, B, 0).ok());
    EXPECT_EQ(token.balance_of(B), 0);
    ASSERT_TRUE(token.transfer(C, B, 0).ok());  // neither side funded
    EXPECT_EQ(token.transfer(A, A, 1).status, TxStatus::self_transfer);
    EXPECT_EQ(token.transfer_from(S, A, A, 0).status, TxStatus::self_transfer);
    EXPECT_EQ(token.balance_sum(), 1000);
}

TEST_F(Fixture, self_transfer_rejected_by_contract)
{
    auto b = build(TokenOp::transfer(A, B, 1));
    const auto call = encode_call(TransferCall{A, 1, 1000, 1000}, b.bundle.encode());
    EXPECT_EQ(token.submit(A, call).status, TxStatus::self_transfer);
}

TEST_F(Fixture, stale_bundle_is_stale_proof)
{
    ASSERT_TRUE(token.transfer(A, B, 100).ok());
    const auto pending = build(TokenOp::transfer(A, C, 10));
    ASSERT_TRUE(token.transfer(B, C, 5).ok());  // competing transaction
    const auto before = snapshot();
    const auto r = token.submit(A, pending.calldata);
    EXPECT_EQ(r.status, TxStatus::stale_proof);
    EXPECT_EQ(snapshot(), before);
    // Rebuilding succeeds.
    EXPECT_TRUE(token.transfer(A, C, 10).ok());
}

TEST_F(Fixture, schema_mismatches)
{
    auto b = build(TokenOp::transfer(A, B, 10)).bundle;
    auto reordered = b;
    std::swap(reordered.entries[0], reordered.entries[1]);
    EXPECT_EQ(token.submit(A, encode_call(TransferCall{B, 10, 1000, 0}, reordered.encode())).status,
        TxStatus::bundle_schema_mismatch);

    auto dropped = b;
    dropped.entries.erase(dropped.entries.begin());  // belongs required without extension
    EXPECT_EQ(token.submit(A, encode_call(TransferCall{B, 10, 1000, 0}, dropped.encode())).status,
        TxStatus::bundle_schema_mismatch);

    auto wrong_op = b;
    wrong_op.op = BundleOp::approve;
    EXPECT_EQ(token.submit(A, encode_call(TransferCall{B, 10, 1000, 0}, wrong_op.encode())).status,
        TxStatus::bundle_schema_mismatch);

    EXPECT_EQ(token.submit(A, Bytes{1, 2, 3}).status, TxStatus::bundle_schema_mismatch);
}

TEST_F(Fixture, acc_chain_integrity)
{
    ASSERT_TRUE(token.transfer(A, B, 100).ok());
    const auto before = token.state();
    const auto b = build(TokenOp::transfer(A, B, 10));
    Contract shadow = token.contract();
    const auto ex = shadow.execute(A, b.calldata);
    ASSERT_TRUE(ex.ok());
    ASSERT_EQ(ex.updates.size(), 4u);
    auto running = before.balances_acc;
    for (const auto& u : ex.updates)
    {
        auto m = net.memory(token.client().id(AccKind::balances));
        (void)m;
        EXPECT_NE(u.after, running);
        running = u.after;
    }
    EXPECT_EQ(running, shadow.state().balances_acc);
    // Updates run del, del, add, add in bundle order.
    EXPECT_EQ(ex.updates[0].op, acc::UpdateOp::del);
    EXPECT_EQ(ex.updates[1].op, acc::UpdateOp::del);
    EXPECT_EQ(ex.updates[2].op, acc::UpdateOp::add);
    EXPECT_EQ(ex.updates[3].op, acc::UpdateOp::add);
}

TEST_F(Fixture, constant_contract_state)
{
    static_assert(ContractState::persistent_words == 4);
    for (int i = 0; i < 50; ++i)
    {
        const auto r = token.transfer(A, Address::derive(100 + i), 1);
        ASSERT_TRUE(r.ok());
        for (const auto& a : r.trace.storage)
            EXPECT_EQ(a.contract_keys, 4u);
    }
    EXPECT_EQ(token.balances().size(), 51u);
}

TEST(TokenCore, proof_extension_drops_removable_belongs)
{
    StorageNetwork n1;
    StorageNetwork n2;
    AccToken plain{n1, 1};
    AccToken ext{n2, 1, ContractConfig{true}};
    plain.deploy(A, 1000);
    ext.deploy(A, 1000);
    for (auto* t : {&plain, &ext})
    {
        ASSERT_TRUE(t->transfer(A, B, 100).ok());
        ASSERT_TRUE(t->approve(A, S, 50).ok());
    }
    struct Case
    {
        TokenOp op;
        uint32_t saved;
    };
    for (const auto& c : {Case{TokenOp::transfer(A, B, 5), 2}, Case{TokenOp::approve(B, S, 5), 1},
             Case{TokenOp::approve(A, S, 40), 1}, Case{TokenOp::transfer_from(S, A, B, 3), 4},
             Case{TokenOp::transfer(A, C, 5), 2}})
    {
        const auto p = plain.execute(c.op);
        const auto e = ext.execute(c.op);
        ASSERT_TRUE(p.ok() && e.ok()) << to_string(e.status);
        EXPECT_EQ(p.verifications - e.verifications, c.saved) << to_string(c.op.kind);
        EXPECT_LT(e.proof_bytes, p.proof_bytes);
    }
    EXPECT_EQ(plain.state(), ext.state());

    // Extension contract still refuses to infer facts no update implies.
    const auto b = ext.client().build(ext.state(), TokenOp::approve(C, S, 0));
    ASSERT_EQ(b.status, TxStatus::success);
    EXPECT_EQ(b.bundle.entries.size(), 1u);  // just add_pair
    EXPECT_TRUE(ext.submit(C, b.calldata).ok());
}

TEST(TokenCore, oracle_equivalence_with_baseline)
{
    for (const uint64_t seed : {1u, 2u, 3u})
    {
        const auto w = bench::random_workload({100, 1000, seed, 1'000'000});
        const auto base = bench::run_baseline(w);
        const auto acc = bench::run_acc_token(w);
        EXPECT_EQ(bench::compare_verdicts(acc, base), "");
        EXPECT_EQ(bench::compare_state(acc, base), "");
        EXPECT_TRUE(acc.conserved);
        EXPECT_TRUE(base.conserved);
        EXPECT_TRUE(acc.constant_state);
        EXPECT_GT(acc.accepted, 300u);
        EXPECT_LT(acc.accepted, 1000u);
    }
}

TEST(TokenCore, oracle_equivalence_with_proof_extension)
{
    const auto w = bench::random_workload({50, 400, 9, 10'000});
    const auto acc = bench::run_acc_token(w, {}, ContractConfig{true});
    const auto base = bench::run_baseline(w);
    EXPECT_EQ(bench::compare_verdicts(acc, base), "");
    EXPECT_EQ(bench::compare_state(acc, base), "");
}

TEST(TokenCore, faults_only_drop_transactions)
{
    const auto w = bench::random_workload({40, 300, 5, 100'000});
    for (const auto& policy : {FaultPolicy::corrupt_bits(1e-4, 1), FaultPolicy::corrupt_bits(1.0, 2),
             FaultPolicy::stale(1), FaultPolicy::stale(3), FaultPolicy::unavailable(0.3, 4)})
    {
        const auto faulty = bench::run_acc_token(w, policy);
        std::vector<std::size_t> drop;
        for (std::size_t i = 0; i < faulty.statuses.size(); ++i)
        {
            if (is_fault(faulty.statuses[i]))
                drop.push_back(i);
        }
        const auto honest = bench::run_acc_token(bench::without(w, drop));
        std::vector<TxStatus> kept;
        for (const auto s : faulty.statuses)
        {
            if (!is_fault(s))
                kept.push_back(s);
        }
        EXPECT_EQ(kept, honest.statuses) << storage::to_string(policy.mode);
        EXPECT_EQ(bench::compare_state(faulty, honest), "") << storage::to_string(policy.mode);
        EXPECT_TRUE(faulty.conserved);
    }
}

TEST(TokenCore, client_reads_fail_closed_under_faults)
{
    StorageNetwork net;
    AccToken t{net, 1};
    t.deploy(A, 1000);
    ASSERT_TRUE(t.transfer(A, B, 300).ok());
    net.set_policy(FaultPolicy::corrupt_bits(1.0, 1));
    EXPECT_THROW(t.balance_of(A), VerificationFailed);
    EXPECT_EQ(t.transfer(A, B, 1).status, TxStatus::verification_failed);
    net.set_policy(FaultPolicy::stale(1));
    EXPECT_THROW(t.balance_of(B), VerificationFailed);
    net.set_policy(FaultPolicy::unavailable(1.0));
    EXPECT_THROW(t.balance_of(A), storage::Unavailable);
    EXPECT_EQ(t.transfer(A, B, 1).status, TxStatus::unavailable);
    net.set_policy({});
    EXPECT_EQ(t.balance_of(A), 700);
}
