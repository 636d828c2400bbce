// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/accumulator/element.hpp>

namespace acctoken::acc
{
namespace
{
constexpr uint8_t leaf_tag[] = {tag::leaf};
constexpr uint8_t internal_tag[] = {tag::internal};
constexpr uint8_t empty_tag[] = {tag::empty};
constexpr uint8_t element_tag[] = {tag::element};
constexpr uint8_t element_key_tag[] = {tag::element_key};
}  // namespace

const Digest& empty_root() noexcept
{
    static const Digest root = sha256(ByteView{empty_tag});
    return root;
}

Digest Element::digest(HashTally* tally) const
{
    return sha256({element_tag, bytes_}, tally);
}

Digest Element::key(HashTally* tally) const
{
    if (whole_key())
        return digest(tally);
    return sha256({element_key_tag, ByteView{bytes_}.first(key_length_)}, tally);
}

std::pair<Digest, Digest> Element::key_and_digest(HashTally* tally) const
{
    const auto d = digest(tally);
    if (whole_key())
        return {d, d};
    return {key(tally), d};
}

Digest leaf_hash(const Digest& key, const Digest& element_digest, HashTally* tally)
{
    return sha256({leaf_tag, key, element_digest}, tally);
}

Digest internal_hash(uint8_t depth, const Digest& left, const Digest& right, HashTally* tally)
{
    const uint8_t d[] = {depth};
    return sha256({internal_tag, d, left, right}, tally);
}
}  // namespace acctoken::acc
