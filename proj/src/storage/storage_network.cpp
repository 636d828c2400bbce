// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/storage/storage_network.hpp>

#include <stdexcept>

namespace acctoken::storage
{
FaultPolicy FaultPolicy::corrupt_bits(double rate, uint64_t seed)
{
    FaultPolicy p;
    p.mode = Mode::corrupt_bits;
    p.rate = rate;
    p.seed = seed;
    return p;
}

FaultPolicy FaultPolicy::stale(uint64_t lag_epochs)
{
    FaultPolicy p;
    p.mode = Mode::stale;
    p.lag_epochs = lag_epochs;
    return p;
}

FaultPolicy FaultPolicy::unavailable(double probability, uint64_t seed)
{
    FaultPolicy p;
    p.mode = Mode::unavailable;
    p.probability = probability;
    p.seed = seed;
    return p;
}

void FaultPolicy::validate() const
{
    if (!(rate >= 0.0 && rate <= 1.0))
        throw std::invalid_argument{"fault rate must be in [0, 1]"};
    if (!(probability >= 0.0 && probability <= 1.0))
        throw std::invalid_argument{"fault probability must be in [0, 1]"};
}

std::string to_string(FaultPolicy::Mode m)
{
    switch (m)
    {
    case FaultPolicy::Mode::honest:
        return "honest";
    case FaultPolicy::Mode::corrupt_bits:
        return "corrupt_bits";
    case FaultPolicy::Mode::stale:
        return "stale";
    case FaultPolicy::Mode::unavailable:
        return "unavailable";
    }
    return "?";
}

FaultPolicy::Mode parse_fault_mode(std::string_view s)
{
    for (const auto m : {FaultPolicy::Mode::honest, FaultPolicy::Mode::corrupt_bits,
             FaultPolicy::Mode::stale, FaultPolicy::Mode::unavailable})
    {
        if (to_string(m) == s)
            return m;
    }
    throw std::invalid_argument{"unknown fault mode: " + std::string{s}};
}

PredictedUpdate UpdateDraft::build(acc::UpdateOp op, const acc::Element& x)
{
    const auto w = memory_.apply(op, x);
    return {memory_.value(), net_->transmit(acc::encode(w))};
}

Bytes UpdateDraft::prove(const acc::Element& x) const
{
    return net_->transmit(acc::encode(memory_.prove(x)));
}

StorageNetwork::StorageNetwork(FaultPolicy policy)
{
    set_policy(policy);
}

void StorageNetwork::set_policy(FaultPolicy policy)
{
    policy.validate();
    std::scoped_lock lock{rng_mutex_};
    policy_ = policy;
    rng_.seed(policy.seed);
}

FaultPolicy StorageNetwork::policy() const
{
    std::scoped_lock lock{rng_mutex_};
    return policy_;
}

acc::AccumulatorValue StorageNetwork::register_accumulator(const AccumulatorId& id)
{
    std::unique_lock lock{state_mutex_};
    auto [value, memory] = acc::setup(256);
    if (!slots_.emplace(id, Slot{std::move(memory), {}}).second)
        throw std::invalid_argument{"accumulator already registered"};
    return value;
}

const StorageNetwork::Slot& StorageNetwork::slot(const AccumulatorId& id) const
{
    const auto it = slots_.find(id);
    if (it == slots_.end())
        throw UnknownAccumulator{"accumulator not registered"};
    return it->second;
}

void StorageNetwork::gate()
{
    ++requests_;
    std::scoped_lock lock{rng_mutex_};
    if (policy_.mode == FaultPolicy::Mode::unavailable &&
        std::bernoulli_distribution{policy_.probability}(rng_))
        throw Unavailable{"storage network unavailable"};
}

acc::Memory StorageNetwork::served_memory(const AccumulatorId& id)
{
    gate();
    const auto lag = policy().mode == FaultPolicy::Mode::stale ? policy().lag_epochs : 0;
    std::shared_lock lock{state_mutex_};
    const auto& s = slot(id);
    if (lag == 0 || s.history.empty())
        return s.current;
    // The oldest retained version stands in while fewer than `lag` commits have happened.
    if (lag >= s.history.size())
        return s.history.front();
    return s.history[s.history.size() - lag];
}

Bytes StorageNetwork::transmit(Bytes payload)
{
    {
        std::scoped_lock lock{rng_mutex_};
        if (policy_.mode == FaultPolicy::Mode::corrupt_bits && policy_.rate > 0.0)
        {
            std::bernoulli_distribution flip{policy_.rate};
            for (auto& byte : payload)
            {
                for (int bit = 0; bit < 8; ++bit)
                {
                    if (flip(rng_))
                        byte ^= static_cast<uint8_t>(1u << bit);
                }
            }
        }
    }
    bytes_served_ += payload.size();
    return payload;
}

Bytes StorageNetwork::fetch_witness(const AccumulatorId& id, const acc::Element& x)
{
    const auto m = served_memory(id);
    return transmit(acc::encode(m.prove(x)));
}

std::optional<acc::Element> StorageNetwork::lookup(const AccumulatorId& id, const acc::Element& x)
{
    const auto m = served_memory(id);
    auto found = m.find_by_key(x);
    if (!found)
        return std::nullopt;
    auto bytes = transmit(Bytes(found->bytes().begin(), found->bytes().end()));
    return acc::Element{std::move(bytes), found->key_length()};
}

PredictedUpdate StorageNetwork::build_update_witness(const AccumulatorId& id, acc::UpdateOp op,
    const acc::Element& x)
{
    return draft(id).build(op, x);
}

UpdateDraft StorageNetwork::draft(const AccumulatorId& id)
{
    return UpdateDraft{this, served_memory(id)};
}

acc::AccumulatorValue StorageNetwork::commit(const AccumulatorId& id, acc::UpdateOp op,
    const acc::Element& x)
{
    const auto keep = std::max<uint64_t>(min_history, policy().lag_epochs);
    std::unique_lock lock{state_mutex_};
    auto& s = const_cast<Slot&>(slot(id));
    auto before = s.current;
    const auto result = acc::update(op, before.value(), s.current, x);
    // Snapshots share structure, so keeping a few is cheap; it lets a stale policy be
    // switched on at any point.
    s.history.push_back(std::move(before));
    while (s.history.size() > keep)
        s.history.pop_front();
    return result.acc_after;
}

acc::AccumulatorValue StorageNetwork::value(const AccumulatorId& id) const
{
    std::shared_lock lock{state_mutex_};
    return slot(id).current.value();
}

acc::Memory StorageNetwork::memory(const AccumulatorId& id) const
{
    std::shared_lock lock{state_mutex_};
    return slot(id).current;
}
}  // namespace acctoken::storage
