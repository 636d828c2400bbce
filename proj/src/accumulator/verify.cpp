// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/accumulator/verify.hpp>

#include <span>

namespace acctoken::acc
{
namespace
{
/// Folds steps onto start, taking sides from side_key. Depths must strictly decrease
/// going up; returns nullopt otherwise.
std::optional<Digest> fold(Digest h, const Digest& side_key, std::span<const PathStep> steps,
    HashTally* tally)
{
    int prev = 256;
    for (const auto& s : steps)
    {
        if (s.depth >= prev)
            return std::nullopt;
        prev = s.depth;
        h = bit_at(side_key, s.depth) ? internal_hash(s.depth, s.sibling, h, tally) :
                                        internal_hash(s.depth, h, s.sibling, tally);
    }
    return h;
}

struct Evaluated
{
    Resolution resolution;
    std::optional<Digest> after;  ///< set when an update replay was requested and is defined
};

std::optional<Evaluated> evaluate(const Element& x, const Witness& w, bool want_after,
    HashTally* tally)
{
    if (w.steps.size() > max_path_steps || w.terminal.has_value() != is_absence_kind(w.kind))
        return std::nullopt;

    const auto [key, digest] = x.key_and_digest(tally);
    if (w.element_digest != digest)
        return std::nullopt;

    Evaluated ev;
    if (!is_absence_kind(w.kind))
    {
        const auto root = fold(leaf_hash(key, digest, tally), key, w.steps, tally);
        if (!root)
            return std::nullopt;
        ev.resolution = {Verdict::member, *root, false};
        if (want_after)
        {
            if (w.steps.empty())
                ev.after = empty_root();
            else
                ev.after = fold(w.steps.front().sibling, key,
                    std::span{w.steps}.subspan(1), tally);
        }
        return ev;
    }

    const auto& t = *w.terminal;
    if (t.is_sentinel())
    {
        if (!w.steps.empty())
            return std::nullopt;
        ev.resolution = {Verdict::absent, empty_root(), true};
        if (want_after)
            ev.after = leaf_hash(key, digest, tally);
        return ev;
    }

    const bool key_absent = t.key != key;
    if (!key_absent && t.digest == digest)
        return std::nullopt;  // that is a membership path, not an absence path
    for (const auto& s : w.steps)
    {
        if (bit_at(key, s.depth) != bit_at(t.key, s.depth))
            return std::nullopt;  // the search for x would have left this path
    }

    const auto terminal_leaf = leaf_hash(t.key, t.digest, tally);
    const auto root = fold(terminal_leaf, t.key, w.steps, tally);
    if (!root)
        return std::nullopt;
    ev.resolution = {Verdict::absent, *root, key_absent};

    if (want_after && key_absent)
    {
        // The new leaf hangs off a fresh node at the first bit where x's key and the
        // terminal key differ; everything deeper than that bit stays below it.
        const unsigned split = first_diff_bit(key, t.key);
        std::size_t below = 0;
        while (below < w.steps.size() && w.steps[below].depth > split)
            ++below;
        const std::span steps{w.steps};
        const auto subtree = fold(terminal_leaf, t.key, steps.first(below), tally);
        const auto leaf = leaf_hash(key, digest, tally);
        const auto depth = static_cast<uint8_t>(split);
        const auto joined = bit_at(key, split) ? internal_hash(depth, *subtree, leaf, tally) :
                                                 internal_hash(depth, leaf, *subtree, tally);
        ev.after = fold(joined, t.key, steps.subspan(below), tally);
    }
    return ev;
}
}  // namespace

std::optional<Resolution> resolve(const Element& x, const Witness& w, HashTally* tally)
{
    const auto ev = evaluate(x, w, false, tally);
    if (!ev)
        return std::nullopt;
    return ev->resolution;
}

Verdict belongs(const AccumulatorValue& acc, const Element& x, const Witness& w, HashTally* tally)
{
    if (w.kind != WitnessKind::membership && w.kind != WitnessKind::non_membership)
        return Verdict::invalid;
    const auto r = resolve(x, w, tally);
    if (!r || r->root != acc.digest)
        return Verdict::invalid;
    return r->verdict;
}

Verdict belongs(const AccumulatorValue& acc, const Element& x, ByteView encoded, HashTally* tally)
{
    const auto w = decode_witness(encoded);
    if (!w)
        return Verdict::invalid;
    return belongs(acc, x, *w, tally);
}

std::optional<UpdateReplay> replay_update(const Element& x, const Witness& w, HashTally* tally)
{
    if (w.kind != WitnessKind::update_add && w.kind != WitnessKind::update_del)
        return std::nullopt;
    const auto ev = evaluate(x, w, true, tally);
    if (!ev || !ev->after)
        return std::nullopt;
    return UpdateReplay{ev->resolution.root, *ev->after};
}

bool check_update(const AccumulatorValue& acc_before, const AccumulatorValue& acc_after,
    const Element& x, const Witness& w, HashTally* tally)
{
    const auto r = replay_update(x, w, tally);
    return r && r->before == acc_before.digest && r->after == acc_after.digest;
}

bool check_update(const AccumulatorValue& acc_before, const AccumulatorValue& acc_after,
    const Element& x, ByteView encoded, HashTally* tally)
{
    const auto w = decode_witness(encoded);
    return w && check_update(acc_before, acc_after, x, *w, tally);
}
}  // namespace acctoken::acc
