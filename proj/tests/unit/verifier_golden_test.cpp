// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

// Links only the verifier library: belongs/check_update must work from their arguments alone.

#include "test_util.hpp"

#include <acctoken/accumulator/verify.hpp>

#include <gtest/gtest.h>

using namespace acctoken;
using namespace acctoken::acc;

namespace
{
AccumulatorValue acc_of(const std::string& hex)
{
    AccumulatorValue v;
    const auto b = from_hex(hex);
    std::copy(b.begin(), b.end(), v.digest.begin());
    return v;
}

class VerifierGolden : public testing::Test
{
protected:
    std::map<std::string, std::string> golden = test::load_golden("accumulator_golden.txt");
};
}  // namespace

TEST_F(VerifierGolden, empty_root_is_tagged_sentinel)
{
    EXPECT_EQ(to_hex(empty_root()), golden.at("empty_root"));
}

TEST_F(VerifierGolden, membership_vector)
{
    const auto bytes = from_hex(golden.at("w_member_b"));
    const auto acc = acc_of(golden.at("root_abc"));
    EXPECT_EQ(belongs(acc, test::element_of("b"), bytes), Verdict::member);
    EXPECT_EQ(belongs(acc, test::element_of("a"), bytes), Verdict::invalid);
    EXPECT_EQ(belongs(acc_of(golden.at("root_a")), test::element_of("b"), bytes), Verdict::invalid);

    const auto w = decode_witness(bytes);
    ASSERT_TRUE(w);
    EXPECT_EQ(encode(*w), bytes);
    EXPECT_EQ(witness_size_bytes(*w), bytes.size());
}

TEST_F(VerifierGolden, non_membership_vectors)
{
    const auto z = test::element_of("z");
    EXPECT_EQ(belongs(acc_of(golden.at("root_abc")), z, from_hex(golden.at("w_absent_z"))),
        Verdict::absent);
    EXPECT_EQ(belongs(AccumulatorValue{empty_root()}, z, from_hex(golden.at("w_absent_empty"))),
        Verdict::absent);
    EXPECT_EQ(from_hex(golden.at("w_absent_empty")).size(),
        witness_header_bytes + witness_terminal_bytes);
}

TEST_F(VerifierGolden, update_from_empty_yields_singleton_root)
{
    // An add witness against Acc_0 is the empty-tree absence path with the update kind.
    auto w = *decode_witness(from_hex(golden.at("w_absent_empty")));
    w.kind = WitnessKind::update_add;
    const auto a = test::element_of("z");
    const auto after = replay_update(a, w);
    ASSERT_TRUE(after);
    EXPECT_EQ(after->before, empty_root());

    w.element_digest = test::element_of("a").digest();
    EXPECT_TRUE(check_update(AccumulatorValue{empty_root()}, acc_of(golden.at("root_a")),
        test::element_of("a"), w));
    EXPECT_FALSE(check_update(AccumulatorValue{empty_root()}, acc_of(golden.at("root_abc")),
        test::element_of("a"), w));
}

TEST_F(VerifierGolden, every_single_byte_flip_is_rejected)
{
    const auto acc = acc_of(golden.at("root_abc"));
    for (const auto& [name, elem] : {std::pair{"w_member_b", "b"}, std::pair{"w_absent_z", "z"}})
    {
        const auto original = from_hex(golden.at(name));
        for (std::size_t i = 0; i < original.size(); ++i)
        {
            for (const uint8_t mask : {uint8_t{0x01}, uint8_t{0x80}, uint8_t{0xff}})
            {
                auto bytes = original;
                bytes[i] ^= mask;
                EXPECT_EQ(belongs(acc, test::element_of(elem), bytes), Verdict::invalid)
                    << name << " byte " << i;
            }
        }
    }
}

TEST(Verifier, malformed_inputs_never_crash)
{
    const auto x = test::element_of("x");
    const AccumulatorValue acc{empty_root()};
    EXPECT_EQ(belongs(acc, x, Bytes{}), Verdict::invalid);
    EXPECT_EQ(belongs(acc, x, Bytes{0x01}), Verdict::invalid);
    EXPECT_EQ(belongs(acc, x, Bytes(35, 0xff)), Verdict::invalid);
    Bytes huge(35, 0);
    huge[0] = 1;
    huge[33] = 0xff;
    huge[34] = 0xff;
    EXPECT_EQ(belongs(acc, x, huge), Verdict::invalid);
    EXPECT_FALSE(check_update(acc, acc, x, Bytes{0x03}));
}
