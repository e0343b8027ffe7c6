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

#include <filesystem>
#include <optional>
#include <vector>

#include "phasecov/harness/config.hpp"
#include "phasecov/integrator.hpp"

namespace phasecov::harness {

struct SimulateResult {
    Trajectory trajectory;
    std::vector<std::filesystem::path> files;
};

/// Writes trajectory.csv, phase_dist.csv and, if configured, the SVG plot.
/// Relative output paths are resolved against out_dir.
SimulateResult run_simulate(const ExperimentConfig &config, const std::filesystem::path &out_dir);

struct ReversalResult {
    Trajectory forward;
    Trajectory reversed;
    /// Largest entrywise distance between the reversed state at time s and
    /// the forward state at t_pre - s.
    double max_recovery_error = 0.0;
    /// Smallest per-sample drop of delta phi over the reversed leg up to t_pre.
    double min_delta_phi_decrease = 0.0;
    /// Reversed-leg time of the first positivity violation.
    std::optional<double> first_positivity_violation;
    std::vector<std::filesystem::path> files;
};

/// Forward for run.t_pre, then reversed for run.extend (default t_pre) from
/// the final forward state. Adds reversal_report.csv to the simulate outputs.
ReversalResult run_reverse_demo(const ExperimentConfig &config,
                                const std::filesystem::path &out_dir);

/// p(phi) of the configured initial state, one row per grid point.
std::filesystem::path run_phase_dist(const ExperimentConfig &config,
                                     const std::filesystem::path &out_dir);

} // namespace phasecov::harness
