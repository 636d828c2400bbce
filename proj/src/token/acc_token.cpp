// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/token/acc_token.hpp>

namespace acctoken::token
{
using acc::UpdateOp;

storage::AccumulatorKind to_storage_kind(AccKind k) noexcept
{
    switch (k)
    {
    case AccKind::balances:
        return storage::AccumulatorKind::balances;
    case AccKind::allowed_addresses:
        return storage::AccumulatorKind::allowed_addresses;
    case AccKind::allowed_balances:
        break;
    }
    return storage::AccumulatorKind::allowed_balances;
}

namespace
{
acc::Witness decode_or_throw(ByteView wire)
{
    auto w = acc::decode_witness(wire);
    if (!w)
        throw VerificationFailed{"undecodable witness from storage"};
    return std::move(*w);
}

struct BundleWriter
{
    ProofBundle bundle;

    void proof(Purpose p, ByteView wire) { bundle.entries.push_back({p, decode_or_throw(wire), {}}); }

    void update(Purpose p, const storage::PredictedUpdate& u)
    {
        bundle.entries.push_back({p, decode_or_throw(u.witness), u.acc_after});
    }
};

bool would_overflow(const Amount& a, const Amount& b)
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

Observation Client::observe_keyed(const acc::AccumulatorValue& acc, AccKind k,
    const acc::Element& probe, const std::function<std::optional<Amount>(const acc::Element&)>& value_of)
{
    Observation o;
    if (const auto hint = net_.lookup(id(k), probe))
    {
        const auto v = value_of(*hint);
        if (!v)
            throw VerificationFailed{"storage returned a tuple for another key"};
        o.witness = net_.fetch_witness(id(k), *hint);
        if (acc::belongs(acc, *hint, o.witness) != acc::Verdict::member)
            throw VerificationFailed{"membership witness does not verify"};
        o.present = true;
        o.value = *v;
        return o;
    }
    o.witness = net_.fetch_witness(id(k), probe);
    const auto w = acc::decode_witness(o.witness);
    const auto r = w && w->kind == acc::WitnessKind::non_membership ? acc::resolve(probe, *w) :
                                                                       std::nullopt;
    if (!r || r->verdict != acc::Verdict::absent || !r->key_absent || r->root != acc.digest)
        throw VerificationFailed{"non-membership witness does not verify"};
    return o;
}

Observation Client::observe_balance(const ContractState& s, const Address& owner)
{
    return observe_keyed(s.balances_acc, AccKind::balances, balance_element(owner, 0),
        [&](const acc::Element& e) -> std::optional<Amount> {
            const auto t = parse_balance(e);
            if (!t || t->owner != owner)
                return std::nullopt;
            return t->amount;
        });
}

Observation Client::observe_allowance(const ContractState& s, const Address& owner,
    const Address& spender)
{
    return observe_keyed(s.allowed_balances_acc, AccKind::allowed_balances,
        allowance_element(owner, spender, 0), [&](const acc::Element& e) -> std::optional<Amount> {
            const auto t = parse_allowance(e);
            if (!t || t->owner != owner || t->spender != spender)
                return std::nullopt;
            return t->amount;
        });
}

Observation Client::observe_pair(const ContractState& s, const Address& owner,
    const Address& spender)
{
    const auto x = pair_element(owner, spender);
    Observation o;
    o.witness = net_.fetch_witness(id(AccKind::allowed_addresses), x);
    switch (acc::belongs(s.allowed_addresses_acc, x, o.witness))
    {
    case acc::Verdict::member:
        o.present = true;
        return o;
    case acc::Verdict::absent:
        return o;
    case acc::Verdict::invalid:
        break;
    }
    throw VerificationFailed{"pair witness does not verify"};
}

Amount Client::allowance(const ContractState& s, const Address& owner, const Address& spender)
{
    if (!observe_pair(s, owner, spender).present)
        return 0;
    return observe_allowance(s, owner, spender).value;
}

Client::Build Client::build(const ContractState& s, const TokenOp& op)
{
    try
    {
        switch (op.kind)
        {
        case OpKind::transfer:
            return build_transfer(s, op);
        case OpKind::approve:
            return build_approve(s, op);
        case OpKind::transfer_from:
            return build_transfer_from(s, op);
        }
    }
    catch (const storage::Unavailable&)
    {
        return {TxStatus::unavailable, {}, {}};
    }
    catch (const VerificationFailed&)
    {
        return {TxStatus::verification_failed, {}, {}};
    }
    catch (const acc::AccumulatorError&)
    {
        // Storage's view disagrees with what the client verified.
        return {TxStatus::verification_failed, {}, {}};
    }
    return {TxStatus::bundle_schema_mismatch, {}, {}};
}

Client::Build Client::build_transfer(const ContractState& s, const TokenOp& op)
{
    if (op.from == op.to)
        return {TxStatus::self_transfer, {}, {}};
    const auto of = observe_balance(s, op.from);
    if (of.value < op.tokens)
        return {TxStatus::insufficient_balance, {}, {}};
    const auto ot = observe_balance(s, op.to);
    if (would_overflow(ot.value, op.tokens))
        return {TxStatus::overflow, {}, {}};

    BundleWriter b;
    b.bundle.op = BundleOp::transfer;
    // Under proof extension every balance (non)membership is implied by an update.
    if (!proof_extension_)
    {
        b.proof(of.present ? Purpose::from_member : Purpose::from_absent, of.witness);
        b.proof(ot.present ? Purpose::to_member : Purpose::to_absent, ot.witness);
    }
    auto d = net_.draft(id(AccKind::balances));
    if (of.present)
        b.update(Purpose::del_from, d.build(UpdateOp::del, balance_element(op.from, of.value)));
    if (ot.present)
        b.update(Purpose::del_to, d.build(UpdateOp::del, balance_element(op.to, ot.value)));
    b.update(Purpose::add_from,
        d.build(UpdateOp::add, balance_element(op.from, of.value - op.tokens)));
    b.update(Purpose::add_to, d.build(UpdateOp::add, balance_element(op.to, ot.value + op.tokens)));

    Build out;
    out.calldata = encode_call(TransferCall{op.to, op.tokens, of.value, ot.value}, b.bundle.encode());
    out.bundle = std::move(b.bundle);
    return out;
}

Client::Build Client::build_approve(const ContractState& s, const TokenOp& op)
{
    const auto& owner = op.from;
    const auto& spender = op.to;
    const auto pair = observe_pair(s, owner, spender);

    BundleWriter b;
    b.bundle.op = BundleOp::approve;
    Amount old;
    if (!pair.present)
    {
        if (!proof_extension_)
            b.proof(Purpose::pair_absent, pair.witness);
        b.update(Purpose::add_pair, net_.build_update_witness(id(AccKind::allowed_addresses),
                                        UpdateOp::add, pair_element(owner, spender)));
        if (op.tokens > 0)
            b.update(Purpose::add_allowance,
                net_.build_update_witness(id(AccKind::allowed_balances), UpdateOp::add,
                    allowance_element(owner, spender, op.tokens)));
    }
    else
    {
        const auto current = observe_allowance(s, owner, spender);
        // Without a triple to delete nothing else shows the pair exists.
        if (!proof_extension_ || !current.present)
            b.proof(Purpose::pair_member, pair.witness);
        auto d = net_.draft(id(AccKind::allowed_balances));
        if (current.present)
        {
            old = current.value;
            b.update(Purpose::del_allowance,
                d.build(UpdateOp::del, allowance_element(owner, spender, old)));
        }
        if (op.tokens > 0)
            b.update(Purpose::add_allowance,
                d.build(UpdateOp::add, allowance_element(owner, spender, op.tokens)));
    }

    Build out;
    out.calldata = encode_call(ApproveCall{spender, op.tokens, old}, b.bundle.encode());
    out.bundle = std::move(b.bundle);
    return out;
}

Client::Build Client::build_transfer_from(const ContractState& s, const TokenOp& op)
{
    const auto& spender = op.sender;
    if (op.from == op.to)
        return {TxStatus::self_transfer, {}, {}};
    const auto pair = observe_pair(s, op.from, spender);
    Observation allowance;
    if (pair.present)
        allowance = observe_allowance(s, op.from, spender);
    if (!pair.present && op.tokens > 0)
        return {TxStatus::not_approved, {}, {}};
    if (allowance.value < op.tokens)
        return {TxStatus::insufficient_allowance, {}, {}};
    const auto of = observe_balance(s, op.from);
    if (of.value < op.tokens)
        return {TxStatus::insufficient_balance, {}, {}};
    const auto ot = observe_balance(s, op.to);
    if (would_overflow(ot.value, op.tokens))
        return {TxStatus::overflow, {}, {}};

    BundleWriter b;
    b.bundle.op = BundleOp::transfer_from;
    // Deleting the triple implies both the pair and the triple; nothing implies absences.
    if (!proof_extension_ || !allowance.present)
    {
        b.proof(pair.present ? Purpose::pair_member : Purpose::pair_absent, pair.witness);
        if (pair.present)
            b.proof(allowance.present ? Purpose::allowance_member : Purpose::allowance_absent,
                allowance.witness);
    }
    if (!proof_extension_)
    {
        b.proof(of.present ? Purpose::from_member : Purpose::from_absent, of.witness);
        b.proof(ot.present ? Purpose::to_member : Purpose::to_absent, ot.witness);
    }
    auto d = net_.draft(id(AccKind::balances));
    if (of.present)
        b.update(Purpose::del_from, d.build(UpdateOp::del, balance_element(op.from, of.value)));
    if (ot.present)
        b.update(Purpose::del_to, d.build(UpdateOp::del, balance_element(op.to, ot.value)));
    b.update(Purpose::add_from,
        d.build(UpdateOp::add, balance_element(op.from, of.value - op.tokens)));
    b.update(Purpose::add_to, d.build(UpdateOp::add, balance_element(op.to, ot.value + op.tokens)));
    if (allowance.present)
    {
        auto da = net_.draft(id(AccKind::allowed_balances));
        b.update(Purpose::del_allowance,
            da.build(UpdateOp::del, allowance_element(op.from, spender, allowance.value)));
        b.update(Purpose::add_allowance, da.build(UpdateOp::add,
                                             allowance_element(op.from, spender,
                                                 allowance.value - op.tokens)));
    }

    Build out;
    out.calldata = encode_call(
        TransferFromCall{op.from, op.to, op.tokens, allowance.value, of.value, ot.value},
        b.bundle.encode());
    out.bundle = std::move(b.bundle);
    return out;
}

AccToken::AccToken(storage::StorageNetwork& net, uint64_t contract_id, ContractConfig cfg)
  : net_{net}, id_{contract_id}, contract_{cfg}, client_{net, contract_id, cfg.proof_extension}
{
    for (const auto k : {AccKind::balances, AccKind::allowed_addresses, AccKind::allowed_balances})
        net_.register_accumulator(client_.id(k));
}

TxStatus AccToken::deploy(const Address& deployer, const Amount& total)
{
    const auto x = balance_element(deployer, total);
    const auto p = net_.build_update_witness(client_.id(AccKind::balances), UpdateOp::add, x);
    const auto ex = contract_.deploy(deployer, total, p.acc_after, p.witness);
    if (ex.ok())
    {
        for (const auto& u : ex.updates)
            net_.commit(client_.id(u.kind), u.op, u.x);
        logs_.push_back(*ex.log);
    }
    return ex.status;
}

TxResult AccToken::execute(const TokenOp& op)
{
    auto built = client_.build(state(), op);
    if (built.status != TxStatus::success)
    {
        TxResult r;
        r.status = built.status;
        return r;
    }
    return submit(op.sender, built.calldata);
}

TxResult AccToken::submit(const Address& sender, ByteView calldata)
{
    const auto ex = contract_.execute(sender, calldata);

    TxResult r;
    r.status = ex.status;
    r.failed_step = ex.failed_step;
    r.proof_bytes = ex.proof_bytes;
    r.verifications = ex.verifications;
    r.trace.add_calldata(calldata);
    for (std::size_t k = 0; k < acc_kind_count; ++k)
    {
        if (ex.loaded[k])
            r.trace.add_storage(gas::StorageOp::read, ContractState::persistent_words);
    }
    for (std::size_t k = 0; k < acc_kind_count; ++k)
    {
        if (ex.stored[k])
            r.trace.add_storage(gas::StorageOp::write_update, ContractState::persistent_words);
    }
    r.trace.hashing = ex.hashing;
    if (ex.log)
        r.trace.logs.push_back(erc20_event_log);

    if (ex.ok())
    {
        for (const auto& u : ex.updates)
        {
            if (net_.commit(client_.id(u.kind), u.op, u.x) != u.after)
                throw std::logic_error{"storage fell out of lock-step with the contract"};
        }
        for (std::size_t k = 0; k < acc_kind_count; ++k)
        {
            const auto kind = static_cast<AccKind>(k);
            if (net_.value(client_.id(kind)) != state().acc(kind))
                throw std::logic_error{"storage fell out of lock-step with the contract"};
        }
        logs_.push_back(*ex.log);
        last_updates_ = ex.updates;
    }
    return r;
}

std::map<Address, Amount> AccToken::balances() const
{
    std::map<Address, Amount> out;
    net_.memory(client_.id(AccKind::balances)).for_each([&](const acc::Element& e) {
        const auto t = parse_balance(e);
        if (!t || !out.emplace(t->owner, t->amount).second)
            throw std::logic_error{"malformed balance tuple in storage"};
    });
    return out;
}

std::map<std::pair<Address, Address>, Amount> AccToken::allowances() const
{
    std::map<std::pair<Address, Address>, Amount> out;
    net_.memory(client_.id(AccKind::allowed_balances)).for_each([&](const acc::Element& e) {
        const auto t = parse_allowance(e);
        if (!t)
            throw std::logic_error{"malformed allowance tuple in storage"};
        out.emplace(std::pair{t->owner, t->spender}, t->amount);
    });
    return out;
}

std::set<std::pair<Address, Address>> AccToken::approved_pairs() const
{
    std::set<std::pair<Address, Address>> out;
    net_.memory(client_.id(AccKind::allowed_addresses)).for_each([&](const acc::Element& e) {
        const auto b = e.bytes();
        std::pair<Address, Address> p;
        std::copy_n(b.begin() + 1, 20, p.first.bytes.begin());
        std::copy_n(b.begin() + 21, 20, p.second.bytes.begin());
        out.insert(p);
    });
    return out;
}

std::optional<Amount> AccToken::stored_balance(const Address& owner) const
{
    const auto e = net_.memory(client_.id(AccKind::balances)).find_by_key(balance_element(owner, 0));
    if (!e)
        return std::nullopt;
    return parse_balance(*e).value().amount;
}

std::optional<Amount> AccToken::stored_allowance(const Address& owner, const Address& spender) const
{
    const auto e = net_.memory(client_.id(AccKind::allowed_balances))
                       .find_by_key(allowance_element(owner, spender, 0));
    if (!e)
        return std::nullopt;
    return parse_allowance(*e).value().amount;
}

Amount AccToken::balance_sum() const
{
    Amount sum;
    for (const auto& [_, v] : balances())
        sum += v;
    return sum;
}
}  // namespace acctoken::token
