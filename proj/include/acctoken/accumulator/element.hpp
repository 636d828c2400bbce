// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/sha256.hpp>

#include <compare>
#include <stdexcept>

namespace acctoken::acc
{
/// One-byte domain separation tags for every hash the accumulator computes.
namespace tag
{
inline constexpr uint8_t leaf = 0x00;
inline constexpr uint8_t internal = 0x01;
inline constexpr uint8_t empty = 0x02;
inline constexpr uint8_t element = 0x03;
inline constexpr uint8_t element_key = 0x04;
}  // namespace tag

/// The accumulator's value: the digest of the hash tree's root node.
struct AccumulatorValue
{
    Digest digest{};

    friend auto operator<=>(const AccumulatorValue&, const AccumulatorValue&) = default;
};

/// Digest of the empty-tree sentinel, H(tag::empty). This is Acc_0.
const Digest& empty_root() noexcept;

/// An accumulated byte string.
///
/// The tree position of an element is derived from its key: the first key_length() bytes.
/// By default the key is the whole element, which gives plain set semantics. A shorter
/// key turns the accumulator into a keyed set where at most one element per key can be
/// present, and non-membership witnesses then prove that no element with that key exists.
class Element
{
public:
    explicit Element(Bytes bytes, std::size_t key_length = 0) : bytes_{std::move(bytes)}
    {
        if (bytes_.empty())
            throw std::invalid_argument{"accumulator element must be non-empty"};
        if (key_length > bytes_.size())
            throw std::invalid_argument{"element key longer than element"};
        key_length_ = key_length == 0 ? bytes_.size() : key_length;
    }

    [[nodiscard]] ByteView bytes() const noexcept { return bytes_; }
    [[nodiscard]] std::size_t key_length() const noexcept { return key_length_; }
    [[nodiscard]] bool whole_key() const noexcept { return key_length_ == bytes_.size(); }

    /// H(tag::element || bytes).
    [[nodiscard]] Digest digest(HashTally* tally = nullptr) const;

    /// Tree key: the digest itself for whole-key elements, else H(tag::element_key || prefix).
    [[nodiscard]] Digest key(HashTally* tally = nullptr) const;

    /// Both hashes, computing the digest only once for whole-key elements.
    [[nodiscard]] std::pair<Digest, Digest> key_and_digest(HashTally* tally = nullptr) const;

    friend bool operator==(const Element&, const Element&) = default;

private:
    Bytes bytes_;
    std::size_t key_length_ = 0;
};

Digest leaf_hash(const Digest& key, const Digest& element_digest, HashTally* tally = nullptr);
Digest internal_hash(uint8_t depth, const Digest& left, const Digest& right, HashTally* tally = nullptr);
}  // namespace acctoken::acc
