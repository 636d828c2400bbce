// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/gas/config.hpp>
#include <acctoken/gas/meter.hpp>
#include <acctoken/gas/rent.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

using namespace acctoken;
using namespace acctoken::gas;

namespace
{
GasSchedule scaled()
{
    GasSchedule s;
    s.mode = PricingMode::scaled;
    return s;
}
}  // namespace

TEST(GasSchedule, access_levels)
{
    EXPECT_EQ(access_levels(0), 1u);
    EXPECT_EQ(access_levels(1), 1u);
    EXPECT_EQ(access_levels(2), 1u);
    EXPECT_EQ(access_levels(3), 2u);
    EXPECT_EQ(access_levels(4), 2u);
    EXPECT_EQ(access_levels(5), 3u);
    EXPECT_EQ(access_levels(400'000), 19u);  // 2^18 < 400000 <= 2^19
    EXPECT_EQ(access_levels(800'001), 20u);
}

TEST(GasSchedule, flat_constants)
{
    const GasSchedule flat;
    for (const uint64_t n : {0u, 4u, 1000u, 400'000u})
    {
        EXPECT_EQ(sload_cost(flat, n), 200u);
        EXPECT_EQ(sstore_cost(flat, StoreKind::new_key, n), 20'000u);
        EXPECT_EQ(sstore_cost(flat, StoreKind::update, n), 5'000u);
    }
    EXPECT_EQ(flat.write_access_factor(), 44u);
}

TEST(GasSchedule, scaled_reads)
{
    const auto s = scaled();
    EXPECT_EQ(sload_cost(s, 400'000), 15'200u);
    EXPECT_EQ(sload_cost(s, 0), 800u);
    EXPECT_EQ(sload_cost(s, 2), 800u);
    for (uint64_t n = 2; n < (uint64_t{1} << 40); n *= 2)
        EXPECT_EQ(sload_cost(s, 2 * n) - sload_cost(s, n), 800u);
    uint64_t prev = 0;
    for (uint64_t n = 0; n < 5000; ++n)
    {
        EXPECT_GE(sload_cost(s, n), prev);
        prev = sload_cost(s, n);
    }
}

TEST(GasSchedule, scaled_writes)
{
    const auto s = scaled();
    EXPECT_EQ(sstore_cost(s, StoreKind::update, 4), 440'000u);
    EXPECT_EQ(sstore_cost(s, StoreKind::new_key, 400'000), 16'720'000u);

    auto knob = s;
    knob.write_amplification = 1;
    EXPECT_EQ(sstore_cost(knob, StoreKind::update, 4), 5'000u * 4 * 2);
}

TEST(GasSchedule, hash_costs_and_toggles)
{
    GasSchedule s;
    EXPECT_EQ(hash_cost(s, 64), 784u);
    EXPECT_EQ(hash_cost(s, 0), 760u);
    EXPECT_EQ(hash_cost(s, 65), 796u);

    auto no_call = s;
    no_call.remove_precompile_call_cost = true;
    EXPECT_EQ(hash_cost(no_call, 64), 84u);

    auto both = no_call;
    both.equalize_hash_costs = true;
    EXPECT_EQ(hash_cost(both, 64), 42u);

    const double reduction = 1.0 - 42.0 / 784.0;
    EXPECT_NEAR(reduction, 0.946, 0.001);
    EXPECT_GE(reduction, 0.90);

    HashTally tally;
    tally.record(64);
    tally.record(66);
    EXPECT_EQ(hash_cost(s, tally), hash_cost(s, 64) + hash_cost(s, 66));
}

TEST(GasMeter, empty_trace_is_base_only)
{
    const auto r = meter_transaction(GasSchedule{}, TxTrace{});
    EXPECT_EQ(r.total, 21'000u);
    EXPECT_EQ(r[GasCategory::base], 21'000u);
}

TEST(GasMeter, receipt_is_sum_of_categories_and_deterministic)
{
    TxTrace t;
    const Bytes data{0, 0, 1, 2, 3};
    t.add_calldata(data);
    t.add_storage(StorageOp::read, 10);
    t.add_storage(StorageOp::write_new, 10);
    t.add_storage(StorageOp::write_update, 11);
    t.hashing.record(66);
    t.logs.push_back({3, 32});

    for (const auto& s : {GasSchedule{}, scaled()})
    {
        const auto r = meter_transaction(s, t);
        uint64_t sum = 0;
        for (const auto g : r.gas)
            sum += g;
        EXPECT_EQ(r.total, sum);
        EXPECT_EQ(r, meter_transaction(s, t));
    }
    const auto flat = meter_transaction(GasSchedule{}, t);
    EXPECT_EQ(flat[GasCategory::calldata], 2u * 4 + 3u * 68);
    EXPECT_EQ(flat[GasCategory::storage_read], 200u);
    EXPECT_EQ(flat[GasCategory::storage_write], 25'000u);
    EXPECT_EQ(flat[GasCategory::hashing], 796u);
    EXPECT_EQ(flat[GasCategory::other], 375u + 3 * 375 + 32 * 8);
}

TEST(Rent, base_rate_derivation)
{
    // Exact rational: 0.30*12/202.18 * 1e18 / (2^30/32) = 530657634.7596355...
    const auto r = derive_base_rent(0.30, 202.18, 32);
    EXPECT_NEAR(static_cast<double>(r), 530'657'634.7596356, 1e-3);
    EXPECT_LE(std::fabs(static_cast<double>(r) - 530'657'634.8), 0.1);
}

TEST(Rent, tiers_and_continuity)
{
    const RentParams p;
    p.validate();
    EXPECT_DOUBLE_EQ(p.k_max(), 500.0 * 1024 * 1024 * 1024 / 32);

    EXPECT_EQ(rent_rate(p, 0), static_cast<long double>(p.r_base));
    EXPECT_EQ(rent_rate(p, p.k_low()), static_cast<long double>(p.r_base));

    const auto at_high = rent_rate(p, p.k_high());
    EXPECT_NEAR(static_cast<double>(at_high / p.r_base), 1.0 + std::log2(3.2), 1e-12);
    EXPECT_NEAR(static_cast<double>(at_high / p.r_base), 2.678, 1e-3);

    for (const double k : {p.k_low(), p.k_high()})
    {
        const auto left = rent_rate(p, k);
        const auto right = rent_rate(p, std::nextafter(k, 1e30));
        EXPECT_LE(std::fabs(static_cast<double>(right - left)), 1.0);
    }

    long double prev = 0;
    for (double k = 0; k < 2 * p.k_max(); k += p.k_max() / 1000)
    {
        const auto r = rent_rate(p, k);
        EXPECT_GE(r, prev);
        prev = r;
    }
    EXPECT_NEAR(static_cast<double>(rent_rate(p, 2 * p.k_high()) / at_high), 2.0, 1e-12);
}

TEST(Rent, annual_rent)
{
    const RentParams p;
    EXPECT_EQ(annual_rent(p, 0, 1000), 0.0L);
    const auto acc_token = annual_rent(p, 4, 1'000'000);
    EXPECT_NEAR(static_cast<double>(acc_token), 4 * 530'657'634.8, 1e-3);
    EXPECT_NEAR(static_cast<double>(acc_token), 2.12e9, 0.01e9);

    const auto baseline = annual_rent(p, 400'001, 1'000'000);
    EXPECT_NEAR(static_cast<double>(baseline), 2.12e14, 0.01e14);
    EXPECT_NEAR(static_cast<double>(baseline / acc_token), 1e5, 1.0);

    EXPECT_THROW(annual_rent(p, 10, 5), std::invalid_argument);
}

TEST(Rent, validation)
{
    RentParams p;
    p.u_low = 0.9;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.u_high = 1.0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(CostConfig, dump_matches_golden_and_round_trips)
{
    std::ostringstream out;
    dump_cost_config(out, CostConfig{});

    std::ifstream golden{std::string{ACCTOKEN_TEST_DATA_DIR} + "/default_cost_config.txt"};
    std::stringstream expected;
    expected << golden.rdbuf();
    EXPECT_EQ(out.str(), expected.str());

    CostConfig changed;
    apply_cost_setting(changed, "schedule.mode", "scaled");
    apply_cost_setting(changed, "schedule.write_amplification", "7");
    apply_cost_setting(changed, "schedule.equalize_hash_costs", "true");
    apply_cost_setting(changed, "rent.s_max_gib", "1000");
    apply_cost_setting(changed, "rent.u_low", "0.3");
    std::ostringstream dumped;
    dump_cost_config(dumped, changed);

    CostConfig reread;
    std::istringstream in{dumped.str()};
    std::string line;
    while (std::getline(in, line))
    {
        const auto eq = line.find('=');
        ASSERT_NE(eq, std::string::npos);
        EXPECT_TRUE(apply_cost_setting(reread, line.substr(0, eq), line.substr(eq + 1)));
    }
    EXPECT_EQ(reread, changed);
}

TEST(CostConfig, rejects_bad_settings)
{
    CostConfig c;
    EXPECT_FALSE(apply_cost_setting(c, "fault.mode", "honest"));
    EXPECT_THROW(apply_cost_setting(c, "schedule.nope", "1"), std::invalid_argument);
    EXPECT_THROW(apply_cost_setting(c, "schedule.sload_gas", "-1"), std::invalid_argument);
    EXPECT_THROW(apply_cost_setting(c, "schedule.mode", "cheap"), std::invalid_argument);
    EXPECT_THROW(apply_cost_setting(c, "rent.u_low", "abc"), std::invalid_argument);
}
