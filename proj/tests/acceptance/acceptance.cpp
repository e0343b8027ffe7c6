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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "phasecov/harness/verify.hpp"
#include "phasecov/phasecov.hpp"

namespace {

using namespace phasecov;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

harness::VerifyOptions full_sweep() {
    harness::VerifyOptions options;
    options.trials = 1000;
    options.seed = 7;
    return options;
}

const harness::VerificationReport &sweep_report() {
    static const harness::VerificationReport report = harness::run_verify(full_sweep());
    return report;
}

CovariantGenerator dephasing(const Spectrum &s) {
    CovariantGenerator gen(s);
    std::vector<Complex> w;
    for (int label : s.labels()) {
        w.emplace_back(label);
    }
    gen.add_term(0, w);
    return gen;
}

DensityMatrix with_random_phases(const DensityMatrix &rho, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> phases(rho.dim());
    for (double &p : phases) {
        p = rng.uniform(0.0, kTwoPi);
    }
    return apply_diagonal_phases(rho, phases);
}

Outcome monotonicity() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    const harness::VerificationReport &report = sweep_report();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(report.attempted == 3000, fmt::format("{} trials attempted", report.attempted));
    out.require(report.worst_term >= -1e-10,
                fmt::format("worst per-k term {:.3e}", report.worst_term));
    out.require(report.worst_total >= -1e-10,
                fmt::format("worst total {:.3e}", report.worst_total));
    out.require(report.pass(), fmt::format("{} counterexamples", report.counterexamples.size()));
    out.require(seconds < 300.0, fmt::format("sweep took {:.1f} s", seconds));
    if (out.pass) {
        out.detail = fmt::format("3000 trials, worst term {:.3e}, worst total {:.3e}, {:.1f} s",
                                 report.worst_term, report.worst_total, seconds);
    }
    return out;
}

Outcome oracle_equivalence() {
    Outcome out;
    const harness::VerificationReport &report = sweep_report();
    for (const harness::Counterexample &c : report.counterexamples) {
        out.require(c.check.find("oracle_mismatch") == std::string::npos,
                    fmt::format("trial {} disagrees with the oracle", c.index));
    }
    for (std::size_t d : {2, 3}) {
        bool found = false;
        for (const harness::VerifyCell &cell : report.cells) {
            if (cell.kind == SpectrumKind::CyclicFinite && cell.dim == d) {
                found = true;
                out.require(cell.bottom_boundary_trials > 0 && cell.top_boundary_trials > 0,
                            fmt::format("cyclic d={} never hit both boundary sums", d));
            }
        }
        out.require(found, fmt::format("no cyclic d={} trials", d));
    }

    // Hand-built boundary cases: raising off the top at d=2, lowering below
    // the bottom at d=3, both on uniform states.
    const CostFunction pd = CostFunction::phase_deviation();
    {
        const Spectrum s = Spectrum::cyclic(2);
        CovariantGenerator gen(s);
        gen.add_term(1, {Complex(0.3, 0.1), Complex(0.8, -0.6)});
        const DensityMatrix rho = standard_state(s, UniformPhaseState{});
        const auto a = cost_derivative_analytic(gen, rho, require_phase_pure(rho), pd);
        out.require(std::abs(a.term_rates[0].top_boundary - 0.5) <= 1e-12,
                    "d=2 top boundary term");
        out.require(std::abs(cost_derivative_numeric(gen, rho, pd) - a.total) <= 1e-12,
                    "d=2 oracle");
    }
    {
        const Spectrum s = Spectrum::cyclic(3);
        CovariantGenerator gen(s);
        gen.add_term(-2, {Complex(0.0, 0.9), 0.4, 0.2});
        const DensityMatrix rho = standard_state(s, UniformPhaseState{});
        const auto a = cost_derivative_analytic(gen, rho, require_phase_pure(rho), pd);
        out.require(std::abs(a.term_rates[0].bottom_boundary - 0.27) <= 1e-12,
                    "d=3 bottom boundary term");
        out.require(std::abs(cost_derivative_numeric(gen, rho, pd) - a.total) <= 1e-12,
                    "d=3 oracle");
    }
    if (out.pass) {
        out.detail = fmt::format("worst mismatch {:.3e} over 3000 trials; boundary sums hit at "
                                 "cyclic d=2 and d=3",
                                 report.worst_mismatch);
    }
    return out;
}

Outcome micro_case() {
    Outcome out;
    const Spectrum s = Spectrum::cyclic(2);
    const CovariantGenerator gen = dephasing(s);
    const DensityMatrix rho = standard_state(s, UniformPhaseState{});
    const CostFunction pd = CostFunction::phase_deviation();
    const auto analytic = cost_derivative_analytic(gen, rho, require_phase_pure(rho), pd);
    const double numeric = cost_derivative_numeric(gen, rho, pd);
    out.require(std::abs(analytic.moment_rates[0] - 0.5) <= 1e-12,
                fmt::format("analytic T_1 = {}", analytic.moment_rates[0]));
    out.require(std::abs(numeric - 0.5) <= 1e-12, fmt::format("numeric T_1 = {}", numeric));
    const Trajectory traj = integrate(gen, rho, 1.0, 1e-3, Direction::Forward);
    const double err = std::abs(traj.samples.back().rho(0, 1) - Complex(0.5 * std::exp(-0.5)));
    out.require(err <= 1e-8, fmt::format("rho_01(1) error {:.3e}", err));
    if (out.pass) {
        out.detail = fmt::format("T_1 = {} / {}, rho_01(1) error {:.3e}", analytic.moment_rates[0],
                                 numeric, err);
    }
    return out;
}

Outcome preserving() {
    Outcome out;
    struct Case {
        Spectrum spectrum;
        Support support;
        std::optional<std::vector<double>> v;
    };
    const std::vector<Case> cases{
        {Spectrum::naturals(32), {0, 8}, std::nullopt},
        {Spectrum::naturals(40), {4, 10}, std::nullopt},
        {Spectrum::integers(41), {16, 9}, std::vector<double>{1.0}},
    };
    double worst_moment = 0.0;
    for (std::size_t c = 0; c < cases.size(); ++c) {
        const Case &pc = cases[c];
        const CovariantGenerator gen = build_preserving_generator(pc.spectrum, {1.0}, pc.v);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const DensityMatrix rho = random_phase_pure(pc.spectrum, seed, 1 + seed % 3, pc.support);
            IntegrateOptions options;
            options.moment_order = 8;
            options.epsilon_tail = 1e-8;
            const Trajectory traj = integrate(gen, rho, 1.0, 1e-3, Direction::Forward, options);
            const Sample &first = traj.samples.front();
            for (std::size_t i = 0; i < traj.samples.size(); ++i) {
                const Sample &s = traj.samples[i];
                out.require(s.phase_pure, "state left the phase-pure set");
                for (std::size_t k = 0; k < 8; ++k) {
                    worst_moment = std::max(worst_moment, std::abs(s.moments[k] - first.moments[k]));
                }
                if (i > 0) {
                    out.require(s.number_variance >= traj.samples[i - 1].number_variance - 1e-12,
                                fmt::format("number variance fell at t = {}", s.t));
                }
            }
            out.require(traj.samples.back().number_variance > first.number_variance + 0.5,
                        "number variance did not grow");
        }
    }
    out.require(worst_moment <= 1e-6, fmt::format("moment drift {:.3e}", worst_moment));
    if (out.pass) {
        out.detail = fmt::format("15 runs, moment drift {:.3e}, variance non-decreasing",
                                 worst_moment);
    }
    return out;
}

Outcome time_reversal() {
    Outcome out;
    double worst_recovery = 0.0;
    double worst_forward = std::numeric_limits<double>::infinity();
    double worst_reverse = std::numeric_limits<double>::infinity();
    std::size_t runs = 0;
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        const std::size_t d = 2 + seed % 7;
        const Spectrum s = Spectrum::cyclic(d);
        const CovariantGenerator gen =
            seed % 4 == 0 ? dephasing(s)
                          : random_covariant_generator(
                                s, seed, {.max_shift = 3, .terms_per_shift = 2,
                                          .purity_preserving = true});
        IntegrateOptions options;
        options.costs = {CostFunction::phase_deviation(), CostFunction::reciprocal_peak_likelihood(d)};
        const DensityMatrix rho = random_phase_pure(s, seed + 100, 1 + seed % 4);
        const Trajectory fwd = integrate(gen, rho, 0.5, 1e-3, Direction::Forward, options);
        const DensityMatrix mid = DensityMatrix::unvalidated(s, fwd.samples.back().rho);
        const Trajectory rev = integrate(gen, mid, 0.5, 1e-3, Direction::Reversed, options);
        ++runs;
        worst_recovery =
            std::max(worst_recovery, (rev.samples.back().rho - rho.entries()).cwiseAbs().maxCoeff());
        for (std::size_t i = 1; i < fwd.samples.size(); ++i) {
            for (std::size_t c = 0; c < options.costs.size(); ++c) {
                worst_forward = std::min(worst_forward, fwd.samples[i].uncertainties[c] -
                                                            fwd.samples[i - 1].uncertainties[c]);
                worst_reverse = std::min(worst_reverse, rev.samples[i - 1].uncertainties[c] -
                                                            rev.samples[i].uncertainties[c]);
            }
        }
    }
    out.require(worst_recovery <= 1e-7, fmt::format("recovery error {:.3e}", worst_recovery));
    out.require(worst_forward >= -1e-9, fmt::format("forward delta phi fell by {:.3e}", -worst_forward));
    out.require(worst_reverse >= -1e-9, fmt::format("reversed delta phi rose by {:.3e}", -worst_reverse));
    if (out.pass) {
        out.detail = fmt::format("{} runs, recovery {:.3e}, worst forward step {:.3e}, worst "
                                 "reversed step {:.3e}",
                                 runs, worst_recovery, worst_forward, worst_reverse);
    }
    return out;
}

Outcome phase_statistics_sanity() {
    Outcome out;
    double worst_norm = 0.0;
    double worst_fock = 0.0;
    double worst_shift = 0.0;
    double worst_fourier = 0.0;
    const SpectrumKind kinds[] = {SpectrumKind::NaturalsTruncated, SpectrumKind::IntegersTruncated,
                                  SpectrumKind::CyclicFinite};
    for (std::size_t d : {2, 4, 8, 16, 32}) {
        const std::size_t m = 4 * d;
        const std::vector<double> grid = phase_grid(m);
        for (std::uint64_t trial = 0; trial < 100; ++trial) {
            const Spectrum s(kinds[trial % 3], d);
            const DensityMatrix rho =
                with_random_phases(random_phase_pure(s, 1000 * d + trial, 1 + trial % 4), trial);
            const PhasePureDecomposition decomp = require_phase_pure(rho);
            const std::vector<double> p = phase_distribution(rho, decomp, m);
            worst_norm = std::max(worst_norm, std::abs(integrate_periodic(p) - 1.0));

            const std::size_t steps = 1 + trial % (m - 1);
            const double theta = kTwoPi * static_cast<double>(steps) / static_cast<double>(m);
            const std::vector<double> rotated = povm_density(rotate_phase(rho, theta), decomp.chi, m);
            for (std::size_t j = 0; j < m; ++j) {
                worst_shift = std::max(worst_shift, std::abs(rotated[(j + steps) % m] - p[j]));
            }

            for (std::size_t k = 1; k < d; ++k) {
                std::vector<double> weighted(m);
                for (std::size_t j = 0; j < m; ++j) {
                    weighted[j] = p[j] * std::cos(static_cast<double>(k) * grid[j]);
                }
                worst_fourier = std::max(worst_fourier, std::abs(integrate_periodic(weighted) -
                                                                 moment(rho, decomp, k)));
            }

            const int label = s.label(trial % d);
            const DensityMatrix fock = standard_state(s, FockState{label});
            for (double v : phase_distribution(fock, require_phase_pure(fock), m)) {
                worst_fock = std::max(worst_fock, std::abs(v - 1.0 / kTwoPi));
            }
        }
    }
    out.require(worst_norm <= 1e-9, fmt::format("normalization error {:.3e}", worst_norm));
    out.require(worst_fock <= 1e-9, fmt::format("fock deviation {:.3e}", worst_fock));
    out.require(worst_shift <= 1e-9, fmt::format("rotation shift error {:.3e}", worst_shift));
    out.require(worst_fourier <= 1e-9, fmt::format("Fourier mismatch {:.3e}", worst_fourier));
    if (out.pass) {
        out.detail = fmt::format("500 states, norm {:.1e}, fock {:.1e}, shift {:.1e}, Fourier {:.1e}",
                                 worst_norm, worst_fock, worst_shift, worst_fourier);
    }
    return out;
}

Outcome determinism() {
    Outcome out;
    const std::string first = harness::report_csv(sweep_report());
    harness::VerifyOptions options = full_sweep();
    const std::string second = harness::report_csv(harness::run_verify(options));
    options.threads = 3;
    const std::string threaded = harness::report_csv(harness::run_verify(options));
    out.require(first == second, "repeated seed 7 reports differ");
    out.require(first == threaded, "report depends on the thread count");
    if (out.pass) {
        out.detail = fmt::format("seed 7 report ({} bytes) identical across runs and thread counts",
                                 first.size());
    }
    return out;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"monotonicity of the cost derivative", monotonicity},
        {"analytic rates match the dense oracle", oracle_equivalence},
        {"dephasing micro-case", micro_case},
        {"preserving generators keep every moment", preserving},
        {"time reversal", time_reversal},
        {"phase statistics sanity", phase_statistics_sanity},
        {"verify determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception &e) {
            outcome = {false, fmt::format("exception: {}", e.what())};
        }
        fmt::print("{} [{}] {}: {}\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                   outcome.detail);
        failures += outcome.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
