// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/accumulator/element.hpp>

#include <optional>
#include <vector>

namespace acctoken::acc
{
enum class WitnessKind : uint8_t
{
    membership = 1,
    non_membership = 2,
    update_add = 3,
    update_del = 4,
};

enum class UpdateOp : uint8_t
{
    add,
    del,
};

/// True for kinds whose path ends at the point where the element is absent.
constexpr bool is_absence_kind(WitnessKind k) noexcept
{
    return k == WitnessKind::non_membership || k == WitnessKind::update_add;
}

/// One step of a hash path.
///
/// `depth` is the bit index at which the parent node branches. The side the path takes
/// at that node is the corresponding bit of the path's leaf key, so it is not sent.
struct PathStep
{
    uint8_t depth = 0;
    Digest sibling{};

    friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// The node an absence path ends at: a leaf with another key (or the same key but a
/// different element), or the empty-tree sentinel encoded as {empty_root, empty_root}.
struct Terminal
{
    Digest key{};
    Digest digest{};

    [[nodiscard]] bool is_sentinel() const noexcept
    {
        return key == empty_root() && digest == empty_root();
    }

    static Terminal sentinel() noexcept { return {empty_root(), empty_root()}; }

    friend bool operator==(const Terminal&, const Terminal&) = default;
};

/// A membership, non-membership or update witness. Steps are ordered bottom-up.
struct Witness
{
    WitnessKind kind = WitnessKind::membership;
    Digest element_digest{};
    std::vector<PathStep> steps;
    std::optional<Terminal> terminal;  ///< present iff is_absence_kind(kind)

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Canonical encoding:
///   kind(1) || element-digest(32) || step-count(2, big-endian)
///   || step-count * (depth(1) || sibling(32))
///   || [terminal-key(32) || terminal-digest(32)]   (absence kinds only)
inline constexpr std::size_t witness_header_bytes = 35;
inline constexpr std::size_t witness_step_bytes = 33;
inline constexpr std::size_t witness_terminal_bytes = 64;
inline constexpr std::size_t max_path_steps = 256;

void encode_to(Bytes& out, const Witness& w);
Bytes encode(const Witness& w);

/// Reads one witness from the reader; nullopt on any malformation.
std::optional<Witness> decode_witness(ByteReader& reader);

/// Decodes a witness that must span the whole input.
std::optional<Witness> decode_witness(ByteView bytes);

/// Exact length of encode(w).
std::size_t witness_size_bytes(const Witness& w) noexcept;
}  // namespace acctoken::acc
