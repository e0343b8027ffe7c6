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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phasecov/cost_function.hpp"
#include "phasecov/generator.hpp"

namespace phasecov {

enum class Direction {
    Forward,   ///< d rho/dt = + sum L[B] rho
    Reversed,  ///< d rho/dt = - sum L[B] rho
};

std::string_view to_string(Direction direction);

enum class TailPolicy {
    Error,  ///< throw TailOverflow
    Flag,   ///< record and continue
};

struct IntegrateOptions {
    /// Record every stride-th step (step 0 and the final step always).
    std::size_t stride = 1;
    std::vector<CostFunction> costs;
    /// Moments recorded per sample; 0 selects min(d - 1, 8).
    std::size_t moment_order = 0;
    double epsilon_tail = 1e-8;
    TailPolicy tail_policy = TailPolicy::Error;
    /// Rerun at dt/2 and report the max entrywise change of the final state.
    bool check_halving = false;
    double positivity_threshold = -1e-8;
    double blowup_limit = 1e6;
};

struct Sample {
    double t = 0.0;
    Matrix rho;
    double trace_error = 0.0;
    double min_eigenvalue = 0.0;
    double tail_mass = 0.0;
    /// max |rho - rho^dagger| / 2 removed by the last symmetrisation.
    double hermitian_residue = 0.0;
    double number_mean = 0.0;
    double number_variance = 0.0;
    bool phase_pure = false;
    /// Indexed k-1; NaN when the state is not phase-pure.
    std::vector<double> moments;
    /// Parallel to IntegrateOptions::costs; NaN when not phase-pure.
    std::vector<double> mean_costs;
    std::vector<double> uncertainties;
};

struct Trajectory {
    Spectrum spectrum = Spectrum::naturals(1);
    Direction direction = Direction::Forward;
    double step = 0.0;
    std::vector<Sample> samples;
    std::vector<std::string> cost_names;
    std::size_t moment_order = 0;
    /// First sample time with min eigenvalue below the positivity threshold.
    std::optional<double> first_positivity_violation;
    bool tail_flagged = false;
    double max_trace_error = 0.0;
    double max_hermitian_residue = 0.0;
    std::optional<double> halving_delta;
};

/// One classical RK4 step of d rho/dt = sign * L(rho).
Matrix rk4_step(const CovariantGenerator &gen, const Matrix &rho, double h, double sign);

/**
 * Fixed-step RK4 with N = ceil(t_end / dt) steps of length t_end / N.
 *
 * The state is symmetrised to its Hermitian part after each step; the trace
 * is never renormalised. Throws StepUnstable when an entry exceeds
 * options.blowup_limit, TailOverflow when the tail mass of a truncated
 * spectrum exceeds options.epsilon_tail under TailPolicy::Error.
 */
Trajectory integrate(const CovariantGenerator &gen, const DensityMatrix &rho0, double t_end,
                     double dt, Direction direction, const IntegrateOptions &options = {});

} // namespace phasecov
