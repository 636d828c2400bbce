// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/accumulator/verify.hpp>

#include <boost/intrusive_ptr.hpp>

#include <functional>

namespace acctoken::acc
{
namespace detail
{
struct Node;
void intrusive_ptr_add_ref(const Node* n) noexcept;
void intrusive_ptr_release(const Node* n) noexcept;
using NodePtr = boost::intrusive_ptr<const Node>;
}  // namespace detail

struct AccumulatorError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct UnsupportedParameter : AccumulatorError
{
    using AccumulatorError::AccumulatorError;
};

struct StaleAccumulator : AccumulatorError
{
    using AccumulatorError::AccumulatorError;
};

struct AlreadyPresent : AccumulatorError
{
    using AccumulatorError::AccumulatorError;
};

struct NotPresent : AccumulatorError
{
    using AccumulatorError::AccumulatorError;
};

/// The accumulator's memory m = (T, X): a compressed binary Merkle trie over element keys.
///
/// Internal nodes commit to the absolute bit index they branch on, so the root depends
/// only on the accumulated set. Nodes are immutable and shared, which makes copying a
/// Memory an O(1) snapshot; mutation copies only the affected root-to-leaf path.
///
/// Single writer. Concurrent const access to a quiescent Memory is safe.
class Memory
{
public:
    Memory() = default;

    [[nodiscard]] AccumulatorValue value() const noexcept;
    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] uint64_t epoch() const noexcept { return epoch_; }

    [[nodiscard]] bool contains(const Element& x) const;

    /// The accumulated element occupying x's key, if any.
    [[nodiscard]] std::optional<Element> find_by_key(const Element& x) const;

    /// Membership witness if x is accumulated, else non-membership.
    [[nodiscard]] Witness prove(const Element& x) const;

    /// Applies op without any accumulator-value checks; returns the update witness.
    /// Throws AlreadyPresent / NotPresent.
    Witness apply(UpdateOp op, const Element& x);

    void for_each(const std::function<void(const Element&)>& fn) const;

    /// Nodes on the search path for x including the terminal (for byte accounting tests).
    [[nodiscard]] std::size_t path_length(const Element& x) const;

private:
    detail::NodePtr root_;
    std::size_t size_ = 0;
    uint64_t epoch_ = 0;
};

struct UpdateResult
{
    AccumulatorValue acc_after;
    Witness witness;
};

/// Setup(k). Only k = 256 is supported.
std::pair<AccumulatorValue, Memory> setup(unsigned security_parameter_bits);

/// Witness(Acc, m, x). Throws StaleAccumulator if acc is not m's value.
Witness witness(const AccumulatorValue& acc, const Memory& memory, const Element& x);

/// Update_op(Acc_before, m, x): mutates memory in place and bumps its epoch.
UpdateResult update(UpdateOp op, const AccumulatorValue& acc_before, Memory& memory,
    const Element& x);
}  // namespace acctoken::acc
