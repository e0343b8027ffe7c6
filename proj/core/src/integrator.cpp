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

#include "phasecov/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "phasecov/error.hpp"
#include "phasecov/phase_purity.hpp"
#include "phasecov/phase_statistics.hpp"

namespace phasecov {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Recorder {
    const IntegrateOptions &options;
    Trajectory &trajectory;
    std::size_t moment_order;

    void record(double t, const Matrix &rho, double residue) {
        const DensityMatrix state = DensityMatrix::unvalidated(trajectory.spectrum, rho);
        Sample sample;
        sample.t = t;
        sample.rho = rho;
        sample.trace_error = state.trace_error();
        sample.min_eigenvalue = state.min_eigenvalue();
        sample.tail_mass = state.tail_mass();
        sample.hermitian_residue = residue;
        sample.number_mean = state.number_mean();
        sample.number_variance = state.number_variance();

        if (trajectory.spectrum.is_truncated() && sample.tail_mass > options.epsilon_tail) {
            if (options.tail_policy == TailPolicy::Error) {
                throw Error(ErrorCode::TailOverflow,
                            "tail mass " + format_magnitude(sample.tail_mass) + " at t = " +
                                format_magnitude(t) + " exceeds " +
                                format_magnitude(options.epsilon_tail),
                            sample.tail_mass);
            }
            trajectory.tail_flagged = true;
        }
        if (sample.min_eigenvalue < options.positivity_threshold &&
            !trajectory.first_positivity_violation) {
            trajectory.first_positivity_violation = t;
        }

        const PhasePurityReport purity = is_phase_pure(state);
        sample.phase_pure = purity.phase_pure();
        if (sample.phase_pure) {
            const PhasePureDecomposition &decomp = *purity.decomposition;
            for (std::size_t k = 1; k <= moment_order; ++k) {
                sample.moments.push_back(moment(state, decomp, k));
            }
            for (const CostFunction &cost : options.costs) {
                const double value = mean_cost(state, decomp, cost);
                sample.mean_costs.push_back(value);
                sample.uncertainties.push_back(cost.uncertainty(value));
            }
        } else {
            sample.moments.assign(moment_order, kNaN);
            sample.mean_costs.assign(options.costs.size(), kNaN);
            sample.uncertainties.assign(options.costs.size(), kNaN);
        }

        trajectory.max_trace_error = std::max(trajectory.max_trace_error, sample.trace_error);
        trajectory.max_hermitian_residue = std::max(trajectory.max_hermitian_residue, residue);
        trajectory.samples.push_back(std::move(sample));
    }
};

// Advances one step and returns the anti-Hermitian residue removed.
double advance(const CovariantGenerator &gen, Matrix &rho, double h, double sign,
               double blowup_limit) {
    Matrix next = rk4_step(gen, rho, h, sign);
    const double residue = 0.5 * (next - next.adjoint()).cwiseAbs().maxCoeff();
    rho = 0.5 * (next + next.adjoint());
    const double largest = rho.cwiseAbs().maxCoeff();
    if (!std::isfinite(largest) || largest > blowup_limit) {
        throw Error(ErrorCode::StepUnstable,
                    "entry magnitude " + format_magnitude(largest) + " exceeds " +
                        format_magnitude(blowup_limit),
                    largest);
    }
    return residue;
}

} // namespace

std::string_view to_string(Direction direction) {
    return direction == Direction::Forward ? "forward" : "reversed";
}

Matrix rk4_step(const CovariantGenerator &gen, const Matrix &rho, double h, double sign) {
    const Matrix k1 = sign * lindblad_apply(gen, rho);
    const Matrix k2 = sign * lindblad_apply(gen, Matrix(rho + 0.5 * h * k1));
    const Matrix k3 = sign * lindblad_apply(gen, Matrix(rho + 0.5 * h * k2));
    const Matrix k4 = sign * lindblad_apply(gen, Matrix(rho + h * k3));
    return rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory integrate(const CovariantGenerator &gen, const DensityMatrix &rho0, double t_end,
                     double dt, Direction direction, const IntegrateOptions &options) {
    if (!(dt > 0.0) || !(t_end > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "t_end and dt must be positive");
    }
    if (options.stride == 0) {
        throw Error(ErrorCode::InvalidArgument, "sample stride must be positive");
    }
    if (gen.spectrum() != rho0.spectrum()) {
        throw Error(ErrorCode::DimensionMismatch, "generator and state use different spectra");
    }
    const std::size_t d = rho0.dim();
    for (const CostFunction &cost : options.costs) {
        if (cost.order() >= d) {
            throw Error(ErrorCode::KTooLarge,
                        "cost '" + cost.name() + "' has order " + std::to_string(cost.order()));
        }
    }

    const auto steps =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9)));
    const double h = t_end / static_cast<double>(steps);
    const double sign = direction == Direction::Forward ? 1.0 : -1.0;

    Trajectory trajectory{rho0.spectrum(), direction, h, {}, {}, 0, {}, false, 0.0, 0.0, {}};
    for (const CostFunction &cost : options.costs) {
        trajectory.cost_names.push_back(cost.name());
    }
    trajectory.moment_order =
        options.moment_order == 0 ? std::min<std::size_t>(d - 1, 8)
                                  : std::min(options.moment_order, d - 1);

    Recorder recorder{options, trajectory, trajectory.moment_order};
    Matrix rho = rho0.entries();
    recorder.record(0.0, rho, 0.0);
    for (std::size_t step = 1; step <= steps; ++step) {
        const double residue = advance(gen, rho, h, sign, options.blowup_limit);
        if (step % options.stride == 0 || step == steps) {
            recorder.record(static_cast<double>(step) * h, rho, residue);
        } else {
            trajectory.max_hermitian_residue = std::max(trajectory.max_hermitian_residue, residue);
        }
    }

    if (options.check_halving) {
        Matrix fine = rho0.entries();
        for (std::size_t step = 0; step < 2 * steps; ++step) {
            advance(gen, fine, 0.5 * h, sign, options.blowup_limit);
        }
        trajectory.halving_delta = (fine - rho).cwiseAbs().maxCoeff();
    }
    return trajectory;
}

} // namespace phasecov
