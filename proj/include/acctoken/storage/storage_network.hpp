// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/accumulator/memory.hpp>

#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>

namespace acctoken::storage
{
enum class AccumulatorKind : uint8_t
{
    balances,
    allowed_addresses,
    allowed_balances,
};

struct AccumulatorId
{
    uint64_t contract = 0;
    AccumulatorKind kind = AccumulatorKind::balances;

    friend auto operator<=>(const AccumulatorId&, const AccumulatorId&) = default;
};

/// How the simulated network misbehaves. Each request draws from a generator seeded
/// with `seed`, so a policy replays identically.
struct FaultPolicy
{
    enum class Mode : uint8_t
    {
        honest,
        corrupt_bits,  ///< every transmitted bit flips with probability `rate`
        stale,         ///< answers come from the Memory as it was `lag_epochs` commits ago
        unavailable,   ///< every request fails with probability `probability`
    };

    Mode mode = Mode::honest;
    double rate = 0.0;
    uint64_t lag_epochs = 0;
    double probability = 0.0;
    uint64_t seed = 0;

    static FaultPolicy honest() { return {}; }
    static FaultPolicy corrupt_bits(double rate, uint64_t seed = 0);
    static FaultPolicy stale(uint64_t lag_epochs);
    static FaultPolicy unavailable(double probability, uint64_t seed = 0);

    /// Throws std::invalid_argument on out-of-range parameters.
    void validate() const;

    friend bool operator==(const FaultPolicy&, const FaultPolicy&) = default;
};

std::string to_string(FaultPolicy::Mode m);
FaultPolicy::Mode parse_fault_mode(std::string_view s);

struct Unavailable : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct UnknownAccumulator : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// An update witness together with the accumulator value it leads to.
struct PredictedUpdate
{
    acc::AccumulatorValue acc_after;
    Bytes witness;
};

class StorageNetwork;

/// Private snapshot of one accumulator's Memory for building a chain of update witnesses.
/// Each build applies its op to the snapshot, so the next witness is computed against the
/// state the previous update produces. The network itself is not touched.
class UpdateDraft
{
public:
    [[nodiscard]] acc::AccumulatorValue value() const { return memory_.value(); }

    /// Throws AlreadyPresent / NotPresent.
    PredictedUpdate build(acc::UpdateOp op, const acc::Element& x);

    /// Encoded (non)membership witness for x against the draft's current state.
    [[nodiscard]] Bytes prove(const acc::Element& x) const;

private:
    friend class StorageNetwork;
    UpdateDraft(StorageNetwork* net, acc::Memory m) : net_{net}, memory_{std::move(m)} {}

    StorageNetwork* net_;
    acc::Memory memory_;
};

/// In-process stand-in for the external storage network holding each accumulator's Memory.
///
/// Responses are wire bytes; the client decodes and checks them. Fetches may run
/// concurrently; commits are serialized.
class StorageNetwork
{
public:
    /// Past versions kept per accumulator even when no stale policy is active.
    static constexpr uint64_t min_history = 16;

    explicit StorageNetwork(FaultPolicy policy = {});

    void set_policy(FaultPolicy policy);
    [[nodiscard]] FaultPolicy policy() const;

    /// Registers an empty accumulator. Registering twice is an error.
    acc::AccumulatorValue register_accumulator(const AccumulatorId& id);

    /// Encoded (non)membership witness for x. Throws Unavailable.
    Bytes fetch_witness(const AccumulatorId& id, const acc::Element& x);

    /// The element stored under x's key, if any (an untrusted hint the client must verify).
    std::optional<acc::Element> lookup(const AccumulatorId& id, const acc::Element& x);

    /// Simulates op on a snapshot. Throws AlreadyPresent / NotPresent / Unavailable.
    PredictedUpdate build_update_witness(const AccumulatorId& id, acc::UpdateOp op,
        const acc::Element& x);

    /// Snapshot for chained builds. Throws Unavailable.
    UpdateDraft draft(const AccumulatorId& id);

    /// Applies a contract-confirmed update.
    acc::AccumulatorValue commit(const AccumulatorId& id, acc::UpdateOp op, const acc::Element& x);

    /// Trusted, fault-free view for tests and invariant checks.
    [[nodiscard]] acc::AccumulatorValue value(const AccumulatorId& id) const;
    [[nodiscard]] acc::Memory memory(const AccumulatorId& id) const;

    /// Total bytes of every response sent to clients.
    [[nodiscard]] uint64_t bytes_served() const noexcept { return bytes_served_.load(); }
    [[nodiscard]] uint64_t requests_served() const noexcept { return requests_.load(); }

private:
    friend class UpdateDraft;

    struct Slot
    {
        acc::Memory current;
        std::deque<acc::Memory> history;  ///< previous versions, most recent last
    };

    const Slot& slot(const AccumulatorId& id) const;
    acc::Memory served_memory(const AccumulatorId& id);
    void gate();
    Bytes transmit(Bytes payload);

    std::map<AccumulatorId, Slot> slots_;
    mutable std::shared_mutex state_mutex_;

    FaultPolicy policy_;
    std::mt19937_64 rng_;
    mutable std::mutex rng_mutex_;

    std::atomic<uint64_t> bytes_served_{0};
    std::atomic<uint64_t> requests_{0};
};
}  // namespace acctoken::storage
