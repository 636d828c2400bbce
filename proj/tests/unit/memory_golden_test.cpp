// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

// Roots and witnesses from incremental insertion must equal the top-down reference build.

#include "test_util.hpp"

#include <acctoken/accumulator/memory.hpp>

#include <gtest/gtest.h>

using namespace acctoken;
using namespace acctoken::acc;

namespace
{
Memory build(const std::vector<Element>& xs)
{
    Memory m;
    for (const auto& x : xs)
        m.apply(UpdateOp::add, x);
    return m;
}
}  // namespace

TEST(MemoryGolden, roots_match_reference)
{
    const auto g = test::load_golden("accumulator_golden.txt");
    EXPECT_EQ(to_hex(Memory{}.value().digest), g.at("empty_root"));
    EXPECT_EQ(to_hex(build({test::element_of("a")}).value().digest), g.at("root_a"));

    const auto abc = build({test::element_of("c"), test::element_of("a"), test::element_of("b")});
    EXPECT_EQ(to_hex(abc.value().digest), g.at("root_abc"));

    std::vector<Element> many;
    for (int i = 15; i >= 0; --i)
        many.push_back(test::element_of("e" + std::to_string(i)));
    EXPECT_EQ(to_hex(build(many).value().digest), g.at("root_e0_e15"));

    std::vector<Element> keyed;
    for (uint8_t i = 1; i <= 5; ++i)
    {
        Bytes b{0x01};
        b.insert(b.end(), 20, i);
        Bytes amount(32, 0);
        const unsigned v = 1000u + i;
        amount[30] = static_cast<uint8_t>(v >> 8);
        amount[31] = static_cast<uint8_t>(v & 0xff);
        append(b, amount);
        keyed.emplace_back(b, 21);
    }
    EXPECT_EQ(to_hex(build(keyed).value().digest), g.at("root_keyed"));
}

TEST(MemoryGolden, witnesses_match_reference_encoding)
{
    const auto g = test::load_golden("accumulator_golden.txt");
    const auto abc = build({test::element_of("a"), test::element_of("b"), test::element_of("c")});
    EXPECT_EQ(to_hex(encode(abc.prove(test::element_of("b")))), g.at("w_member_b"));
    EXPECT_EQ(to_hex(encode(abc.prove(test::element_of("z")))), g.at("w_absent_z"));
    EXPECT_EQ(to_hex(encode(Memory{}.prove(test::element_of("z")))), g.at("w_absent_empty"));
}
