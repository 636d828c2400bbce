// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace acctoken::gas
{
inline constexpr uint64_t gib = uint64_t{1} << 30;

/// Recurring storage rent. Fees are burned: nothing in the model names a recipient.
struct RentParams
{
    uint64_t s_max_bytes = 500 * gib;  ///< system storage capacity
    uint64_t bytes_per_key = 32;
    double u_low = 0.25;   ///< utilization up to which the rate is flat
    double u_high = 0.80;  ///< utilization beyond which the rate grows linearly
    double r_base = 530'657'634.8;  ///< Wei per storage key per year

    [[nodiscard]] double k_max() const noexcept
    {
        return static_cast<double>(s_max_bytes) / static_cast<double>(bytes_per_key);
    }
    [[nodiscard]] double k_low() const noexcept { return u_low * k_max(); }
    [[nodiscard]] double k_high() const noexcept { return u_high * k_max(); }

    /// Throws std::invalid_argument unless 0 < u_low < u_high < 1 and sizes are positive.
    void validate() const;

    friend bool operator==(const RentParams&, const RentParams&) = default;
};

/// Wei per key per year given the total key count in the system:
///   K <= K_low           R_base
///   K_low < K <= K_high  R_base * (1 + log2(K / K_low))
///   K > K_high           R_base * (1 + log2(K_high / K_low)) * (K / K_high)
long double rent_rate(const RentParams& p, double k_total);

/// Annual rent of a contract holding k_contract of the system's k_total keys.
long double annual_rent(const RentParams& p, double k_contract, double k_total);

/// Base rate from a cloud-storage price: USD/GiB/month converted to Wei/key/year.
long double derive_base_rent(double usd_per_gib_month, double usd_per_eth, uint64_t bytes_per_key);
}  // namespace acctoken::gas
