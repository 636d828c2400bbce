// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/accumulator/memory.hpp>

#include <algorithm>
#include <atomic>
#include <cassert>

namespace acctoken::acc
{
namespace detail
{
struct Node
{
    mutable std::atomic<uint32_t> refs{0};
    Digest hash{};
    bool leaf = false;
    uint8_t depth = 0;

protected:
    Node() = default;
};

struct Internal : Node
{
    NodePtr child[2];
};

struct Leaf : Node
{
    Digest key{};
    Digest digest{};
    Element element;

    explicit Leaf(Element e) : element{std::move(e)} {}
};

void intrusive_ptr_add_ref(const Node* n) noexcept
{
    n->refs.fetch_add(1, std::memory_order_relaxed);
}

void intrusive_ptr_release(const Node* n) noexcept
{
    if (n->refs.fetch_sub(1, std::memory_order_acq_rel) == 1)
    {
        if (n->leaf)
            delete static_cast<const Leaf*>(n);
        else
            delete static_cast<const Internal*>(n);
    }
}
}  // namespace detail

namespace
{
using detail::Internal;
using detail::Leaf;
using detail::Node;
using detail::NodePtr;

const Internal& as_internal(const Node* n) noexcept
{
    return *static_cast<const Internal*>(n);
}

const Leaf& as_leaf(const Node* n) noexcept
{
    return *static_cast<const Leaf*>(n);
}

NodePtr make_leaf(const Element& x, const Digest& key, const Digest& digest)
{
    auto* l = new Leaf{x};
    l->leaf = true;
    l->key = key;
    l->digest = digest;
    l->hash = leaf_hash(key, digest);
    return NodePtr{l};
}

NodePtr make_internal(uint8_t depth, NodePtr left, NodePtr right)
{
    auto* n = new Internal;
    n->depth = depth;
    n->hash = internal_hash(depth, left->hash, right->hash);
    n->child[0] = std::move(left);
    n->child[1] = std::move(right);
    return NodePtr{n};
}

/// Follows key bits at each branch; the leaf reached shares the longest prefix with key
/// among all accumulated keys.
const Leaf* blind_search(const Node* n, const Digest& key) noexcept
{
    if (n == nullptr)
        return nullptr;
    while (!n->leaf)
        n = as_internal(n).child[bit_at(key, n->depth)].get();
    return &as_leaf(n);
}

NodePtr insert_at(const Node* n, NodePtr leaf, const Digest& key, unsigned split)
{
    if (n->leaf || n->depth > split)
    {
        const auto depth = static_cast<uint8_t>(split);
        NodePtr existing{n};
        return bit_at(key, split) ? make_internal(depth, std::move(existing), std::move(leaf)) :
                                    make_internal(depth, std::move(leaf), std::move(existing));
    }
    assert(n->depth < split);
    const auto& in = as_internal(n);
    const bool side = bit_at(key, n->depth);
    auto replaced = insert_at(in.child[side].get(), std::move(leaf), key, split);
    return side ? make_internal(n->depth, in.child[0], std::move(replaced)) :
                  make_internal(n->depth, std::move(replaced), in.child[1]);
}

NodePtr erase_at(const Node* n, const Digest& key)
{
    if (n->leaf)
        return nullptr;
    const auto& in = as_internal(n);
    const bool side = bit_at(key, n->depth);
    auto replaced = erase_at(in.child[side].get(), key);
    if (!replaced)
        return in.child[!side];
    return side ? make_internal(n->depth, in.child[0], std::move(replaced)) :
                  make_internal(n->depth, std::move(replaced), in.child[1]);
}

std::vector<PathStep> collect_path(const Node* n, const Digest& key)
{
    std::vector<PathStep> steps;
    while (n != nullptr && !n->leaf)
    {
        const auto& in = as_internal(n);
        const bool side = bit_at(key, n->depth);
        steps.push_back({n->depth, in.child[!side]->hash});
        n = in.child[side].get();
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

void visit(const Node* n, const std::function<void(const Element&)>& fn)
{
    if (n == nullptr)
        return;
    if (n->leaf)
    {
        fn(as_leaf(n).element);
        return;
    }
    visit(as_internal(n).child[0].get(), fn);
    visit(as_internal(n).child[1].get(), fn);
}
}  // namespace

AccumulatorValue Memory::value() const noexcept
{
    return {root_ ? root_->hash : empty_root()};
}

bool Memory::contains(const Element& x) const
{
    const auto [key, digest] = x.key_and_digest();
    const auto* l = blind_search(root_.get(), key);
    return l != nullptr && l->key == key && l->digest == digest;
}

std::optional<Element> Memory::find_by_key(const Element& x) const
{
    const auto key = x.key();
    const auto* l = blind_search(root_.get(), key);
    if (l == nullptr || l->key != key)
        return std::nullopt;
    return l->element;
}

Witness Memory::prove(const Element& x) const
{
    const auto [key, digest] = x.key_and_digest();
    Witness w;
    w.element_digest = digest;
    const auto* l = blind_search(root_.get(), key);
    if (l == nullptr)
    {
        w.kind = WitnessKind::non_membership;
        w.terminal = Terminal::sentinel();
        return w;
    }
    w.steps = collect_path(root_.get(), key);
    if (l->key == key && l->digest == digest)
    {
        w.kind = WitnessKind::membership;
    }
    else
    {
        w.kind = WitnessKind::non_membership;
        w.terminal = Terminal{l->key, l->digest};
    }
    return w;
}

Witness Memory::apply(UpdateOp op, const Element& x)
{
    const auto [key, digest] = x.key_and_digest();
    const auto* l = blind_search(root_.get(), key);
    auto w = prove(x);

    if (op == UpdateOp::add)
    {
        if (l != nullptr && l->key == key)
            throw AlreadyPresent{"element key already accumulated"};
        w.kind = WitnessKind::update_add;
        auto leaf = make_leaf(x, key, digest);
        root_ = l == nullptr ? std::move(leaf) :
                               insert_at(root_.get(), std::move(leaf), key, first_diff_bit(key, l->key));
        ++size_;
    }
    else
    {
        if (w.kind != WitnessKind::membership)
            throw NotPresent{"element not accumulated"};
        w.kind = WitnessKind::update_del;
        root_ = erase_at(root_.get(), key);
        --size_;
    }
    ++epoch_;
    return w;
}

void Memory::for_each(const std::function<void(const Element&)>& fn) const
{
    visit(root_.get(), fn);
}

std::size_t Memory::path_length(const Element& x) const
{
    return collect_path(root_.get(), x.key()).size();
}

std::pair<AccumulatorValue, Memory> setup(unsigned security_parameter_bits)
{
    if (security_parameter_bits != 256)
        throw UnsupportedParameter{"only 256-bit (SHA-256) accumulators are supported"};
    Memory m;
    return {m.value(), std::move(m)};
}

Witness witness(const AccumulatorValue& acc, const Memory& memory, const Element& x)
{
    if (acc != memory.value())
        throw StaleAccumulator{"accumulator value does not match memory"};
    return memory.prove(x);
}

UpdateResult update(UpdateOp op, const AccumulatorValue& acc_before, Memory& memory,
    const Element& x)
{
    if (acc_before != memory.value())
        throw StaleAccumulator{"accumulator value does not match memory"};
    auto w = memory.apply(op, x);
    return {memory.value(), std::move(w)};
}
}  // namespace acctoken::acc
