// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/gas/rent.hpp>

#include <cmath>
#include <stdexcept>

namespace acctoken::gas
{
void RentParams::validate() const
{
    if (!(0.0 < u_low && u_low < u_high && u_high < 1.0))
        throw std::invalid_argument{"rent thresholds must satisfy 0 < u_low < u_high < 1"};
    if (s_max_bytes == 0 || bytes_per_key == 0)
        throw std::invalid_argument{"rent capacity and key size must be positive"};
    if (!(r_base >= 0.0))
        throw std::invalid_argument{"base rent must be non-negative"};
}

long double rent_rate(const RentParams& p, double k_total)
{
    const long double k = k_total;
    const long double low = p.k_low();
    const long double high = p.k_high();
    const long double base = p.r_base;
    if (k <= low)
        return base;
    if (k <= high)
        return base * (1.0L + std::log2(k / low));
    return base * (1.0L + std::log2(high / low)) * (k / high);
}

long double annual_rent(const RentParams& p, double k_contract, double k_total)
{
    if (k_contract < 0 || k_contract > k_total)
        throw std::invalid_argument{"contract key count must be within [0, total keys]"};
    return static_cast<long double>(k_contract) * rent_rate(p, k_total);
}

long double derive_base_rent(double usd_per_gib_month, double usd_per_eth, uint64_t bytes_per_key)
{
    constexpr long double wei_per_eth = 1e18L;
    const long double keys_per_gib = static_cast<long double>(gib) / bytes_per_key;
    const long double eth_per_gib_year = usd_per_gib_month * 12.0L / usd_per_eth;
    return eth_per_gib_year * wei_per_eth / keys_per_gib;
}
}  // namespace acctoken::gas
