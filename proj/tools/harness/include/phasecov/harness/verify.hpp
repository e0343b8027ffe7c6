// Copyright 2026 The phasecov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "phasecov/spectrum.hpp"

namespace phasecov::harness {

struct VerifyOptions {
    /// Trials per spectrum kind.
    std::size_t trials = 1000;
    std::vector<std::size_t> dims{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};
    std::vector<SpectrumKind> kinds{SpectrumKind::NaturalsTruncated,
                                    SpectrumKind::IntegersTruncated, SpectrumKind::CyclicFinite};
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    /// Self-test: negate the analytic rates before checking them.
    bool inject_sign_flip = false;
};

/// Worst values and counts over the trials of one (kind, dim) cell.
struct VerifyCell {
    SpectrumKind kind = SpectrumKind::NaturalsTruncated;
    std::size_t dim = 0;
    std::size_t trials = 0;
    std::size_t passed = 0;
    double worst_total = 0.0;
    double worst_term = 0.0;
    double worst_mismatch = 0.0;
    double worst_chain = 0.0;
    std::size_t bottom_boundary_trials = 0;
    std::size_t top_boundary_trials = 0;
};

struct Counterexample {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::string check;
    /// Full description: spectrum, cost, state, generator and the rates.
    std::string dump;
};

struct VerificationReport {
    VerifyOptions options;
    std::size_t attempted = 0;
    std::size_t passed = 0;
    double worst_total = 0.0;
    double worst_term = 0.0;
    /// Oracle disagreement |a - n| / max(|a|, |n|, 1e-4).
    double worst_mismatch = 0.0;
    double worst_chain = 0.0;
    std::vector<VerifyCell> cells;
    std::vector<Counterexample> counterexamples;

    [[nodiscard]] bool pass() const noexcept { return counterexamples.empty(); }
};

/**
 * Randomized check of the cost-derivative identities: per (trial, term, k)
 * analytic rates against dense oracles, non-negativity of every T_k and of
 * the total, and a non-negative chain-rule rate of the uncertainty.
 *
 * Trial i (counted across kinds) uses seed ^ i, so the report does not
 * depend on the number of threads.
 */
VerificationReport run_verify(const VerifyOptions &options);

/// CSV text: header block, one row per (kind, dim) cell, then a totals row.
std::string report_csv(const VerificationReport &report);
std::string summary_line(const VerificationReport &report);
std::string counterexample_text(const VerificationReport &report);

} // namespace phasecov::harness
