// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <acctoken/gas/config.hpp>
#include <acctoken/storage/storage_network.hpp>
#include <acctoken/token/ops.hpp>

#include <functional>
#include <iosfwd>

namespace acctoken::bench
{
enum class TokenKind : uint8_t
{
    acc,
    baseline,
};

std::string to_string(TokenKind t);
TokenKind parse_token_kind(std::string_view s);

/// Shape of a population run. Both tokens always run side by side on the same calls.
struct PopulationSpec
{
    std::vector<uint64_t> checkpoints{1024, 2048, 4096};
    std::size_t samples = 100;  ///< metered calls per op kind per checkpoint
    uint64_t seed = 1;
    bool proof_extension = false;
    storage::FaultPolicy fault;
    std::size_t max_retries = 32;  ///< rebuilds of a call that hit a storage fault

    /// Throws std::invalid_argument unless checkpoints are non-empty, >= 2 and strictly increasing.
    void validate() const;

    friend bool operator==(const PopulationSpec&, const PopulationSpec&) = default;
};

/// One metered call: the schedule-independent inputs to the gas model.
struct Sample
{
    token::OpKind op = token::OpKind::transfer;
    gas::TxTrace trace;
    std::size_t proof_bytes = 0;
    uint32_t verifications = 0;
};

struct CheckpointSamples
{
    uint64_t n = 0;  ///< accounts created so far, deployer included
    std::vector<Sample> acc;
    std::vector<Sample> baseline;
};

struct PopulationReport
{
    std::vector<CheckpointSamples> checkpoints;
    uint64_t transactions = 0;   ///< accepted calls, growth and samples
    uint64_t retries = 0;
    bool conserved = true;       ///< balance sum equalled supply after every accepted call
    bool constant_state = true;  ///< every accumulator-token storage access saw 4 words
    bool shadow_ok = true;       ///< both tokens agreed on every call
    std::string first_error;
};

/// Progress callback: (accounts so far, next checkpoint).
using Progress = std::function<void(uint64_t, uint64_t)>;

/// Grows the population to each checkpoint (the deployer sends 1 token to each new
/// account i, and account i approves account i+1 for 1 token), then records `samples`
/// transfers between funded accounts, first-time approvals, and transferFrom calls by
/// account i+1 spending account i's allowance.
PopulationReport run_population(const PopulationSpec& spec, const Progress& progress = {});

struct ResultRow
{
    uint64_t n = 0;
    token::OpKind op = token::OpKind::transfer;
    double gas_mean = 0;
    double gas_p95 = 0;
    double proof_bytes_mean = 0;
    double verifications = 0;  ///< mean per call

    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

/// Prices one token's samples under a schedule; rows sorted by (op name, n).
std::vector<ResultRow> summarize(const PopulationReport& r, TokenKind token,
    const gas::GasSchedule& schedule);

/// Nearest-rank percentile of a non-empty sample.
double percentile(std::vector<uint64_t> values, double p);

inline constexpr std::string_view csv_header = "n,op,gas_mean,gas_p95,proof_bytes_mean,verifications";

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
/// Throws std::invalid_argument on a malformed file.
std::vector<ResultRow> read_csv(std::istream& in);

token::OpKind parse_op(std::string_view s);

struct ComparisonRow
{
    uint64_t n = 0;
    token::OpKind op = token::OpKind::transfer;
    double gas_a = 0;
    double gas_b = 0;
    double ratio = 0;  ///< gas_a / gas_b
};

/// Pairs rows by (op, n). Throws std::invalid_argument if the row sets do not match.
std::vector<ComparisonRow> compare(const std::vector<ResultRow>& a, const std::vector<ResultRow>& b);

void write_comparison(std::ostream& out, const std::vector<ComparisonRow>& rows);

/// Least-squares fit of y = a*log2(n) + b.
struct LogFit
{
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
};

LogFit fit_log2(const std::vector<std::pair<double, double>>& points);
}  // namespace acctoken::bench
