// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/accumulator/witness.hpp>

// Verifier half of the accumulator. Everything here is a pure function of its arguments
// and links without the tree implementation, so it is what the token contract runs.

namespace acctoken::acc
{
/// Outcome of Belongs: 1, 0 or bottom.
enum class Verdict : uint8_t
{
    absent = 0,
    member = 1,
    invalid = 2,
};

/// What a witness proves about an element, independent of any accumulator value.
struct Resolution
{
    Verdict verdict = Verdict::invalid;  ///< member or absent
    Digest root{};                       ///< root the path reproduces
    bool key_absent = false;             ///< absence path proves no element shares x's key
};

/// Replays a membership or non-membership witness for x. nullopt when the witness is
/// malformed or not about x. Update kinds are resolved as their underlying paths.
std::optional<Resolution> resolve(const Element& x, const Witness& w, HashTally* tally = nullptr);

/// 1 if w proves x is accumulated in acc, 0 if it proves x is not, invalid otherwise.
/// Only membership and non-membership kinds are accepted.
Verdict belongs(const AccumulatorValue& acc, const Element& x, const Witness& w,
    HashTally* tally = nullptr);

/// Same, over the canonical encoding; undecodable input is invalid.
Verdict belongs(const AccumulatorValue& acc, const Element& x, ByteView encoded,
    HashTally* tally = nullptr);

/// Roots before and after the update an update witness describes.
struct UpdateReplay
{
    Digest before{};
    Digest after{};
};

std::optional<UpdateReplay> replay_update(const Element& x, const Witness& w,
    HashTally* tally = nullptr);

/// True iff w proves that adding (update_add) or removing (update_del) x turns the set
/// committed by acc_before into the set committed by acc_after.
///
/// An add witness is an absence path under acc_before and a del witness a presence path,
/// so the replay also establishes x's (non)membership in acc_before.
bool check_update(const AccumulatorValue& acc_before, const AccumulatorValue& acc_after,
    const Element& x, const Witness& w, HashTally* tally = nullptr);

bool check_update(const AccumulatorValue& acc_before, const AccumulatorValue& acc_after,
    const Element& x, ByteView encoded, HashTally* tally = nullptr);
}  // namespace acctoken::acc
