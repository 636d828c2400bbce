// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/accumulator/element.hpp>

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

namespace acctoken::test
{
inline acc::Element random_element(std::mt19937_64& rng, std::size_t len = 16)
{
    Bytes b(len);
    for (auto& x : b)
        x = static_cast<uint8_t>(rng());
    return acc::Element{std::move(b)};
}

inline acc::Element element_of(std::string_view s)
{
    return acc::Element{Bytes(s.begin(), s.end())};
}

/// Reads "name hex" lines from tests/data/<file>.
inline std::map<std::string, std::string> load_golden(const std::string& file)
{
    std::ifstream in{std::string{ACCTOKEN_TEST_DATA_DIR} + "/" + file};
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(in, line))
    {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ss{line};
        std::string name, value;
        ss >> name >> value;
        out[name] = value;
    }
    return out;
}
}  // namespace acctoken::test
