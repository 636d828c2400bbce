// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/token/contract.hpp>

#include <algorithm>
#include <stdexcept>

namespace acctoken::token
{
const acc::AccumulatorValue& ContractState::acc(AccKind k) const
{
    switch (k)
    {
    case AccKind::balances:
        return balances_acc;
    case AccKind::allowed_addresses:
        return allowed_addresses_acc;
    case AccKind::allowed_balances:
        break;
    }
    return allowed_balances_acc;
}

acc::AccumulatorValue& ContractState::acc(AccKind k)
{
    return const_cast<acc::AccumulatorValue&>(std::as_const(*this).acc(k));
}

namespace
{
using Word = std::array<uint8_t, 32>;

Bytes encode_words(const std::array<uint8_t, 4>& selector, std::initializer_list<Word> words,
    ByteView bundle)
{
    Bytes out;
    out.reserve(4 + 32 * (words.size() + 1) + bundle.size());
    append(out, selector);
    for (const auto& w : words)
        append(out, w);
    append(out, to_word(Amount{bundle.size()}));
    append(out, bundle);
    return out;
}

/// Reads the argument words and the trailing bundle. nullopt on any layout error.
struct RawCall
{
    std::vector<ByteView> words;
    ByteView bundle;
};

std::optional<RawCall> split_call(ByteView calldata, std::size_t n_words)
{
    ByteReader r{calldata};
    ByteView selector;
    if (!r.read_span(4, selector))
        return std::nullopt;
    RawCall c;
    for (std::size_t i = 0; i < n_words; ++i)
    {
        ByteView w;
        if (!r.read_span(32, w))
            return std::nullopt;
        c.words.push_back(w);
    }
    ByteView len;
    if (!r.read_span(32, len) || amount_from_word(len) != r.remaining())
        return std::nullopt;
    r.read_span(r.remaining(), c.bundle);
    return c;
}

std::optional<Address> address_from_word(ByteView w)
{
    if (!std::all_of(w.begin(), w.begin() + 12, [](uint8_t b) { return b == 0; }))
        return std::nullopt;
    Address a;
    std::copy(w.begin() + 12, w.end(), a.bytes.begin());
    return a;
}

struct Rejected
{
    TxStatus status;
    int step = -1;
};
}  // namespace

Bytes encode_call(const TransferCall& c, ByteView bundle)
{
    return encode_words(transfer_selector,
        {to_word(c.to), to_word(c.tokens), to_word(c.from_balance), to_word(c.to_balance)}, bundle);
}

Bytes encode_call(const ApproveCall& c, ByteView bundle)
{
    return encode_words(approve_selector,
        {to_word(c.spender), to_word(c.tokens), to_word(c.old_allowance)}, bundle);
}

Bytes encode_call(const TransferFromCall& c, ByteView bundle)
{
    return encode_words(transfer_from_selector,
        {to_word(c.from), to_word(c.to), to_word(c.tokens), to_word(c.allowance),
            to_word(c.from_balance), to_word(c.to_balance)},
        bundle);
}

/// Walks a bundle in order and runs each check, recording hash work and the updates.
/// Any failure unwinds with Rejected; nothing is written until the caller commits.
class Verifier
{
public:
    Verifier(const Contract& c, Execution& ex, const ProofBundle& b) : c_{c}, ex_{ex}, b_{b} {}

    const BundleEntry* take(Purpose p)
    {
        if (pos_ < b_.entries.size() && b_.entries[pos_].purpose == p)
            return &b_.entries[pos_++];
        return nullptr;
    }

    void expect_end() const
    {
        if (pos_ != b_.entries.size())
            reject(TxStatus::bundle_schema_mismatch);
    }

    [[noreturn]] static void reject(TxStatus s) { throw Rejected{s}; }

    static void require(bool layout_ok)
    {
        if (!layout_ok)
            reject(TxStatus::bundle_schema_mismatch);
    }

    /// Whether the bundle says the fact is present. Without a (non)membership entry the
    /// answer must be implied by an update entry, which only proof extension allows.
    bool presence(const BundleEntry* member, const BundleEntry* absent, const BundleEntry* del,
        bool absence_implied) const
    {
        if (member || absent)
            return member != nullptr;
        require(c_.cfg_.proof_extension);
        if (del)
            return true;
        require(absence_implied);
        return false;
    }

    void member(AccKind k, const BundleEntry& e, const acc::Element& x)
    {
        ++ex_.verifications;
        if (acc::belongs(c_.state_.acc(k), x, e.witness, &ex_.hashing) != acc::Verdict::member)
            fail(k, e, x);
    }

    /// Proves no element shares x's key.
    void absent(AccKind k, const BundleEntry& e, const acc::Element& x)
    {
        ++ex_.verifications;
        const auto r = e.witness.kind == acc::WitnessKind::non_membership ?
                           acc::resolve(x, e.witness, &ex_.hashing) :
                           std::nullopt;
        if (!r || r->verdict != acc::Verdict::absent || !r->key_absent ||
            r->root != c_.state_.acc(k).digest)
            fail(k, e, x);
    }

    void update(AccKind k, acc::AccumulatorValue& running, const BundleEntry& e, acc::UpdateOp op,
        const acc::Element& x)
    {
        ++ex_.verifications;
        const auto want = op == acc::UpdateOp::add ? acc::WitnessKind::update_add :
                                                     acc::WitnessKind::update_del;
        if (e.witness.kind != want ||
            !acc::check_update(running, e.claimed_after, x, e.witness, &ex_.hashing))
            fail(k, e, x);
        running = e.claimed_after;
        ex_.updates.push_back({k, op, x, e.claimed_after});
        ex_.stored[static_cast<std::size_t>(k)] = true;
    }

private:
    /// A proof that reproduces a recent, no longer current value is stale; otherwise invalid.
    [[noreturn]] void fail(AccKind k, const BundleEntry& e, const acc::Element& x) const
    {
        std::optional<Digest> root;
        if (is_update(e.purpose))
        {
            if (const auto r = acc::replay_update(x, e.witness))
                root = r->before;
        }
        else if (const auto r = acc::resolve(x, e.witness))
        {
            root = r->root;
        }
        const auto& recent = c_.recent_[static_cast<std::size_t>(k)];
        const bool stale = root && *root != c_.state_.acc(k).digest &&
                           std::find(recent.begin(), recent.end(), *root) != recent.end();
        throw Rejected{stale ? TxStatus::stale_proof : TxStatus::invalid_proof,
            static_cast<int>(&e - b_.entries.data())};
    }

    const Contract& c_;
    Execution& ex_;
    const ProofBundle& b_;
    std::size_t pos_ = 0;
};

Contract::Contract(ContractConfig cfg) : cfg_{cfg} {}

void Contract::commit(Execution& ex, const ContractState& next)
{
    state_ = next;
    for (std::size_t k = 0; k < acc_kind_count; ++k)
    {
        if (!ex.stored[k])
            continue;
        auto& recent = recent_[k];
        recent.push_back(state_.acc(static_cast<AccKind>(k)).digest);
        while (recent.size() > cfg_.stale_history)
            recent.pop_front();
    }
}

Execution Contract::deploy(const Address& deployer, const Amount& total,
    const acc::AccumulatorValue& claimed_after, ByteView add_witness)
{
    if (deployed_)
        throw std::logic_error{"contract already deployed"};
    Execution ex;
    if (total == 0)
    {
        ex.status = TxStatus::zero_supply;
        return ex;
    }
    const auto x = balance_element(deployer, total);
    ++ex.verifications;
    const auto w = acc::decode_witness(add_witness);
    if (!w || w->kind != acc::WitnessKind::update_add ||
        !acc::check_update(state_.balances_acc, claimed_after, x, *w, &ex.hashing))
    {
        ex.status = TxStatus::invalid_proof;
        ex.failed_step = 0;
        return ex;
    }
    for (auto& r : recent_)
        r.push_back(acc::empty_root());
    auto next = state_;
    next.balances_acc = claimed_after;
    next.total_supply = total;
    ex.updates.push_back({AccKind::balances, acc::UpdateOp::add, x, claimed_after});
    ex.stored[0] = true;
    ex.log = LogRecord{LogRecord::Kind::transfer, Address{}, deployer, total};
    commit(ex, next);
    deployed_ = true;
    return ex;
}

Execution Contract::execute(const Address& sender, ByteView calldata)
{
    if (!deployed_)
        throw std::logic_error{"contract not deployed"};

    Execution ex;
    ex.status = TxStatus::bundle_schema_mismatch;
    if (calldata.size() < 4)
        return ex;
    std::array<uint8_t, 4> sel{};
    std::copy_n(calldata.begin(), 4, sel.begin());

    std::size_t n_words = 0;
    if (sel == transfer_selector)
        n_words = 4;
    else if (sel == approve_selector)
        n_words = 3;
    else if (sel == transfer_from_selector)
        n_words = 6;
    else
        return ex;

    const auto raw = split_call(calldata, n_words);
    if (!raw)
        return ex;
    std::vector<Amount> v;
    for (const auto w : raw->words)
        v.push_back(amount_from_word(w));

    auto decoded = decode_bundle(raw->bundle);
    if (!decoded.bundle)
    {
        ex.status = decoded.status;
        ex.failed_step = decoded.failed_entry;
        ex.proof_bytes = raw->bundle.size();
        return ex;
    }

    const auto addr = [&](std::size_t i) { return address_from_word(raw->words[i]); };
    Execution out;
    if (sel == transfer_selector)
    {
        const auto to = addr(0);
        if (!to)
            return ex;
        out = transfer(sender, {*to, v[1], v[2], v[3]}, *decoded.bundle);
    }
    else if (sel == approve_selector)
    {
        const auto spender = addr(0);
        if (!spender)
            return ex;
        out = approve(sender, {*spender, v[1], v[2]}, *decoded.bundle);
    }
    else
    {
        const auto from = addr(0);
        const auto to = addr(1);
        if (!from || !to)
            return ex;
        out = transfer_from(sender, {*from, *to, v[2], v[3], v[4], v[5]}, *decoded.bundle);
    }
    out.proof_bytes = raw->bundle.size();
    return out;
}

namespace
{
/// Runs body; a Rejected unwinds to a failed execution with no updates.
template <typename Body>
Execution run_atomically(Execution ex, Body&& body)
{
    try
    {
        body(ex);
    }
    catch (const Rejected& r)
    {
        ex.status = r.status;
        ex.failed_step = r.step;
        ex.updates.clear();
        ex.log.reset();
        ex.stored = {};
    }
    return ex;
}

Amount checked_add(const Amount& a, const Amount& b)
{
    try
    {
        return a + b;
    }
    catch (const std::overflow_error&)
    {
        Verifier::reject(TxStatus::overflow);
    }
}

constexpr auto bal_k = AccKind::balances;
constexpr auto pair_k = AccKind::allowed_addresses;
constexpr auto allow_k = AccKind::allowed_balances;
}  // namespace

Execution Contract::transfer(const Address& from, const TransferCall& c, const ProofBundle& b)
{
    return run_atomically(Execution{}, [&](Execution& ex) {
        Verifier v{*this, ex, b};
        Verifier::require(b.op == BundleOp::transfer);
        if (from == c.to)
            Verifier::reject(TxStatus::self_transfer);
        ex.loaded[0] = true;

        const auto* fm = v.take(Purpose::from_member);
        const auto* fa = fm ? nullptr : v.take(Purpose::from_absent);
        const auto* tm = v.take(Purpose::to_member);
        const auto* ta = tm ? nullptr : v.take(Purpose::to_absent);
        const auto* dfrom = v.take(Purpose::del_from);
        const auto* dto = v.take(Purpose::del_to);
        const auto* afrom = v.take(Purpose::add_from);
        const auto* ato = v.take(Purpose::add_to);
        v.expect_end();
        Verifier::require(afrom && ato);

        const bool from_present = v.presence(fm, fa, dfrom, true);
        const bool to_present = v.presence(tm, ta, dto, true);
        Verifier::require((dfrom != nullptr) == from_present && (dto != nullptr) == to_present);
        Verifier::require((from_present || c.from_balance == 0) && (to_present || c.to_balance == 0));

        const auto& y1 = c.from_balance;
        const auto& y2 = c.to_balance;
        if (fm)
            v.member(bal_k, *fm, balance_element(from, y1));
        if (fa)
            v.absent(bal_k, *fa, balance_element(from, 0));
        if (tm)
            v.member(bal_k, *tm, balance_element(c.to, y2));
        if (ta)
            v.absent(bal_k, *ta, balance_element(c.to, 0));

        if (y1 < c.tokens)
            Verifier::reject(TxStatus::insufficient_balance);
        const auto to_after = checked_add(y2, c.tokens);

        auto next = state_;
        auto& running = next.balances_acc;
        if (dfrom)
            v.update(bal_k, running, *dfrom, acc::UpdateOp::del, balance_element(from, y1));
        if (dto)
            v.update(bal_k, running, *dto, acc::UpdateOp::del, balance_element(c.to, y2));
        v.update(bal_k, running, *afrom, acc::UpdateOp::add, balance_element(from, y1 - c.tokens));
        v.update(bal_k, running, *ato, acc::UpdateOp::add, balance_element(c.to, to_after));

        ex.log = LogRecord{LogRecord::Kind::transfer, from, c.to, c.tokens};
        commit(ex, next);
    });
}

Execution Contract::approve(const Address& owner, const ApproveCall& c, const ProofBundle& b)
{
    return run_atomically(Execution{}, [&](Execution& ex) {
        Verifier v{*this, ex, b};
        Verifier::require(b.op == BundleOp::approve);
        ex.loaded[1] = ex.loaded[2] = true;

        const auto* pm = v.take(Purpose::pair_member);
        const auto* pa = pm ? nullptr : v.take(Purpose::pair_absent);
        const auto* apair = v.take(Purpose::add_pair);
        const auto* dall = v.take(Purpose::del_allowance);
        const auto* aall = v.take(Purpose::add_allowance);
        v.expect_end();

        bool pair_present = false;
        if (pm || pa)
        {
            pair_present = pm != nullptr;
        }
        else
        {
            // An allowance triple only ever exists alongside its pair.
            Verifier::require(cfg_.proof_extension && (apair || dall));
            pair_present = apair == nullptr;
        }
        Verifier::require((apair != nullptr) != pair_present);
        Verifier::require(pair_present || !dall);
        Verifier::require((aall != nullptr) == (c.tokens > 0));
        Verifier::require(dall || c.old_allowance == 0);

        const auto pair = pair_element(owner, c.spender);
        if (pm)
            v.member(pair_k, *pm, pair);
        if (pa)
            v.absent(pair_k, *pa, pair);

        auto next = state_;
        if (apair)
            v.update(pair_k, next.allowed_addresses_acc, *apair, acc::UpdateOp::add, pair);
        if (dall)
            v.update(allow_k, next.allowed_balances_acc, *dall, acc::UpdateOp::del,
                allowance_element(owner, c.spender, c.old_allowance));
        if (aall)
            v.update(allow_k, next.allowed_balances_acc, *aall, acc::UpdateOp::add,
                allowance_element(owner, c.spender, c.tokens));

        ex.log = LogRecord{LogRecord::Kind::approval, owner, c.spender, c.tokens};
        commit(ex, next);
    });
}

Execution Contract::transfer_from(const Address& spender, const TransferFromCall& c,
    const ProofBundle& b)
{
    return run_atomically(Execution{}, [&](Execution& ex) {
        Verifier v{*this, ex, b};
        Verifier::require(b.op == BundleOp::transfer_from);
        if (c.from == c.to)
            Verifier::reject(TxStatus::self_transfer);
        ex.loaded = {true, true, true};

        const auto* pm = v.take(Purpose::pair_member);
        const auto* pa = pm ? nullptr : v.take(Purpose::pair_absent);
        const auto* am = v.take(Purpose::allowance_member);
        const auto* aa = am ? nullptr : v.take(Purpose::allowance_absent);
        const auto* fm = v.take(Purpose::from_member);
        const auto* fa = fm ? nullptr : v.take(Purpose::from_absent);
        const auto* tm = v.take(Purpose::to_member);
        const auto* ta = tm ? nullptr : v.take(Purpose::to_absent);
        const auto* dfrom = v.take(Purpose::del_from);
        const auto* dto = v.take(Purpose::del_to);
        const auto* afrom = v.take(Purpose::add_from);
        const auto* ato = v.take(Purpose::add_to);
        const auto* dall = v.take(Purpose::del_allowance);
        const auto* aall = v.take(Purpose::add_allowance);
        v.expect_end();
        Verifier::require(afrom && ato);

        // The pair is implied by the allowance triple's deletion; its absence never is.
        const bool pair_present = v.presence(pm, pa, dall, false);
        bool allow_present = false;
        if (pair_present)
            allow_present = v.presence(am, aa, dall, false);
        else
            Verifier::require(!am && !aa);
        Verifier::require((dall != nullptr) == allow_present && (aall != nullptr) == allow_present);
        Verifier::require(allow_present || c.allowance == 0);

        const bool from_present = v.presence(fm, fa, dfrom, true);
        const bool to_present = v.presence(tm, ta, dto, true);
        Verifier::require((dfrom != nullptr) == from_present && (dto != nullptr) == to_present);
        Verifier::require((from_present || c.from_balance == 0) && (to_present || c.to_balance == 0));

        const auto& y1 = c.from_balance;
        const auto& y2 = c.to_balance;
        if (pm)
            v.member(pair_k, *pm, pair_element(c.from, spender));
        if (pa)
            v.absent(pair_k, *pa, pair_element(c.from, spender));
        if (am)
            v.member(allow_k, *am, allowance_element(c.from, spender, c.allowance));
        if (aa)
            v.absent(allow_k, *aa, allowance_element(c.from, spender, 0));
        if (fm)
            v.member(bal_k, *fm, balance_element(c.from, y1));
        if (fa)
            v.absent(bal_k, *fa, balance_element(c.from, 0));
        if (tm)
            v.member(bal_k, *tm, balance_element(c.to, y2));
        if (ta)
            v.absent(bal_k, *ta, balance_element(c.to, 0));

        if (!pair_present && c.tokens > 0)
            Verifier::reject(TxStatus::not_approved);
        if (c.allowance < c.tokens)
            Verifier::reject(TxStatus::insufficient_allowance);
        if (y1 < c.tokens)
            Verifier::reject(TxStatus::insufficient_balance);
        const auto to_after = checked_add(y2, c.tokens);

        auto next = state_;
        auto& running = next.balances_acc;
        if (dfrom)
            v.update(bal_k, running, *dfrom, acc::UpdateOp::del, balance_element(c.from, y1));
        if (dto)
            v.update(bal_k, running, *dto, acc::UpdateOp::del, balance_element(c.to, y2));
        v.update(bal_k, running, *afrom, acc::UpdateOp::add, balance_element(c.from, y1 - c.tokens));
        v.update(bal_k, running, *ato, acc::UpdateOp::add, balance_element(c.to, to_after));
        if (dall)
        {
            // The triple is rewritten even when it reaches zero, keeping the bundle shape fixed.
            v.update(allow_k, next.allowed_balances_acc, *dall, acc::UpdateOp::del,
                allowance_element(c.from, spender, c.allowance));
            v.update(allow_k, next.allowed_balances_acc, *aall, acc::UpdateOp::add,
                allowance_element(c.from, spender, c.allowance - c.tokens));
        }

        ex.log = LogRecord{LogRecord::Kind::transfer, c.from, c.to, c.tokens};
        commit(ex, next);
    });
}
}  // namespace acctoken::token
