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

#include "phasecov/harness/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <fmt/format.h>

#include "phasecov/harness/csv.hpp"
#include "phasecov/harness/svg.hpp"
#include "phasecov/phase_statistics.hpp"

namespace phasecov::harness {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::filesystem::path resolve(const std::filesystem::path &dir, const std::filesystem::path &p) {
    return p.is_absolute() ? p : dir / p;
}

IntegrateOptions integrate_options(const ExperimentConfig &config) {
    IntegrateOptions options;
    options.stride = config.run.stride;
    options.costs = build_costs(config);
    options.moment_order = config.output.moments;
    options.epsilon_tail = config.run.epsilon_tail;
    options.tail_policy = config.run.tail_policy;
    options.check_halving = config.run.check_halving;
    return options;
}

CsvHeader header_for(const ExperimentConfig &config) {
    CsvHeader header{config.digest, config.seed, {}};
    header.extra.emplace_back("spectrum", fmt::format("{} {}", to_string(config.spectrum.kind()),
                                                      config.spectrum.dim()));
    header.extra.emplace_back("generator", config.generator.kind);
    return header;
}

/// Phase reference of the POVM used for every phase_dist row.
std::vector<double> reference_chi(const DensityMatrix &rho) {
    const PhasePurityReport report = is_phase_pure(rho);
    if (report.decomposition) {
        return report.decomposition->chi;
    }
    return std::vector<double>(rho.dim(), 0.0);
}

struct Segment {
    const Trajectory *trajectory;
    double offset;
};

std::vector<std::string> trajectory_columns(const Trajectory &traj, bool with_direction) {
    std::vector<std::string> cols{"t", "trace_err", "min_eig", "tail_mass"};
    for (std::size_t k = 1; k <= traj.moment_order; ++k) {
        cols.push_back(fmt::format("moment_k{}", k));
    }
    for (const std::string &name : traj.cost_names) {
        cols.push_back("cost_" + name);
    }
    for (const std::string &name : traj.cost_names) {
        cols.push_back("delta_phi_" + name);
    }
    for (const char *extra : {"number_mean", "number_variance", "herm_residue", "phase_pure"}) {
        cols.emplace_back(extra);
    }
    if (with_direction) {
        cols.emplace_back("direction");
    }
    return cols;
}

void write_outputs(const ExperimentConfig &config, const std::filesystem::path &out_dir,
                   const std::vector<Segment> &segments, const std::vector<double> &chi,
                   CsvHeader header, std::vector<std::filesystem::path> &files) {
    const Trajectory &first = *segments.front().trajectory;
    const bool with_direction = segments.size() > 1;
    header.extra.emplace_back("step", format_double(first.step));
    for (const Segment &seg : segments) {
        if (seg.trajectory->halving_delta) {
            header.extra.emplace_back("halving_delta",
                                      format_double(*seg.trajectory->halving_delta));
        }
        if (seg.trajectory->tail_flagged) {
            header.extra.emplace_back("tail_flagged", std::string(to_string(seg.trajectory->direction)));
        }
    }

    CsvWriter traj_csv(header, trajectory_columns(first, with_direction));
    std::vector<std::string> dist_cols{"t"};
    for (std::size_t j = 0; j < config.output.grid; ++j) {
        dist_cols.push_back(fmt::format("phi_{}", j));
    }
    CsvWriter dist_csv(header, dist_cols);

    for (const Segment &seg : segments) {
        const Trajectory &traj = *seg.trajectory;
        for (const Sample &s : traj.samples) {
            std::vector<std::string> fields;
            const double t = seg.offset + s.t;
            for (double v : {t, s.trace_error, s.min_eigenvalue, s.tail_mass}) {
                fields.push_back(format_double(v));
            }
            for (double v : s.moments) {
                fields.push_back(format_double(v));
            }
            for (double v : s.mean_costs) {
                fields.push_back(format_double(v));
            }
            for (double v : s.uncertainties) {
                fields.push_back(format_double(v));
            }
            for (double v : {s.number_mean, s.number_variance, s.hermitian_residue}) {
                fields.push_back(format_double(v));
            }
            fields.emplace_back(s.phase_pure ? "1" : "0");
            if (with_direction) {
                fields.emplace_back(to_string(traj.direction));
            }
            traj_csv.row(fields);

            const DensityMatrix rho = DensityMatrix::unvalidated(traj.spectrum, s.rho);
            std::vector<double> row{t};
            const std::vector<double> p = povm_density(rho, chi, config.output.grid);
            row.insert(row.end(), p.begin(), p.end());
            dist_csv.row(row);
        }
    }

    const auto traj_path = resolve(out_dir, config.output.trajectory);
    const auto dist_path = resolve(out_dir, config.output.phase_dist);
    traj_csv.save(traj_path);
    dist_csv.save(dist_path);
    files.push_back(traj_path);
    files.push_back(dist_path);
    if (config.output.svg) {
        const auto svg_path = resolve(out_dir, *config.output.svg);
        write_svg(traj_path, dist_path, svg_path);
        files.push_back(svg_path);
    }
}

} // namespace

SimulateResult run_simulate(const ExperimentConfig &config, const std::filesystem::path &out_dir) {
    const DensityMatrix rho0 = build_state(config);
    const CovariantGenerator gen = build_generator(config);
    SimulateResult result;
    result.trajectory = integrate(gen, rho0, config.run.t_end, config.run.dt,
                                  config.run.direction, integrate_options(config));
    write_outputs(config, out_dir, {{&result.trajectory, 0.0}}, reference_chi(rho0),
                  header_for(config), result.files);
    return result;
}

ReversalResult run_reverse_demo(const ExperimentConfig &config,
                                const std::filesystem::path &out_dir) {
    if (!config.run.t_pre) {
        throw ConfigError("run.t_pre", 0, "required by the reversal demo");
    }
    const double t_pre = *config.run.t_pre;
    const double extend = config.run.extend.value_or(t_pre);
    const DensityMatrix rho0 = build_state(config);
    const CovariantGenerator gen = build_generator(config);
    const IntegrateOptions options = integrate_options(config);

    ReversalResult result;
    result.forward = integrate(gen, rho0, t_pre, config.run.dt, Direction::Forward, options);
    const DensityMatrix mid =
        DensityMatrix::unvalidated(config.spectrum, result.forward.samples.back().rho);
    // Same step length as the forward leg so that sample times line up.
    result.reversed = integrate(gen, mid, extend, result.forward.step, Direction::Reversed, options);
    result.first_positivity_violation = result.reversed.first_positivity_violation;

    const std::size_t n_costs = options.costs.size();
    std::vector<std::string> cols{"step", "s", "t"};
    for (const std::string &name : result.reversed.cost_names) {
        cols.push_back("delta_phi_decrease_" + name);
    }
    cols.emplace_back("recovery_error");
    cols.emplace_back("min_eig");

    const double match_tol = 1e-9 * std::max(1.0, t_pre);
    std::vector<std::vector<double>> rows;
    double max_recovery = 0.0;
    double min_decrease = std::numeric_limits<double>::infinity();
    const auto &fwd = result.forward.samples;
    const auto &rev = result.reversed.samples;
    for (std::size_t i = 0; i < rev.size(); ++i) {
        const Sample &s = rev[i];
        std::vector<double> row{static_cast<double>(i), s.t, t_pre + s.t};
        for (std::size_t c = 0; c < n_costs; ++c) {
            const double drop = i == 0 ? 0.0 : rev[i - 1].uncertainties[c] - s.uncertainties[c];
            row.push_back(drop);
            if (i > 0 && s.t <= t_pre + match_tol && std::isfinite(drop)) {
                min_decrease = std::min(min_decrease, drop);
            }
        }
        double recovery = kNaN;
        if (s.t <= t_pre + match_tol) {
            const double target = t_pre - s.t;
            const auto it = std::find_if(fwd.begin(), fwd.end(), [&](const Sample &f) {
                return std::abs(f.t - target) <= match_tol;
            });
            if (it != fwd.end()) {
                recovery = (s.rho - it->rho).cwiseAbs().maxCoeff();
                max_recovery = std::max(max_recovery, recovery);
            }
        }
        row.push_back(recovery);
        row.push_back(s.min_eigenvalue);
        rows.push_back(std::move(row));
    }
    result.max_recovery_error = max_recovery;
    result.min_delta_phi_decrease = std::isfinite(min_decrease) ? min_decrease : 0.0;

    CsvHeader header = header_for(config);
    write_outputs(config, out_dir, {{&result.forward, 0.0}, {&result.reversed, t_pre}},
                  reference_chi(rho0), header, result.files);

    header.extra.emplace_back("t_pre", format_double(t_pre));
    header.extra.emplace_back("extend", format_double(extend));
    header.extra.emplace_back("max_recovery_error", format_double(result.max_recovery_error));
    header.extra.emplace_back("min_delta_phi_decrease",
                              n_costs > 0 ? format_double(result.min_delta_phi_decrease) : "none");
    header.extra.emplace_back("first_positivity_violation",
                              result.first_positivity_violation
                                  ? format_double(*result.first_positivity_violation)
                                  : std::string("none"));
    CsvWriter report(header, cols);
    for (const auto &row : rows) {
        report.row(row);
    }
    const auto report_path = resolve(out_dir, config.output.report);
    report.save(report_path);
    result.files.push_back(report_path);
    return result;
}

std::filesystem::path run_phase_dist(const ExperimentConfig &config,
                                     const std::filesystem::path &out_dir) {
    const DensityMatrix rho = build_state(config);
    const std::vector<double> chi = reference_chi(rho);
    const std::vector<double> grid = phase_grid(config.output.grid);
    const std::vector<double> p = povm_density(rho, chi, config.output.grid);
    CsvHeader header = header_for(config);
    header.extra.emplace_back("phase_pure", is_phase_pure(rho).phase_pure() ? "1" : "0");
    CsvWriter csv(header, {"phi", "p"});
    for (std::size_t j = 0; j < grid.size(); ++j) {
        csv.row({grid[j], p[j]});
    }
    const auto path = resolve(out_dir, config.output.phase_dist);
    csv.save(path);
    return path;
}

} // namespace phasecov::harness
