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

#include "phasecov/harness/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

#include <fmt/format.h>

#include "phasecov/cost_derivative.hpp"
#include "phasecov/harness/config.hpp"
#include "phasecov/harness/csv.hpp"
#include "phasecov/rng.hpp"
#include "phasecov/states.hpp"

namespace phasecov::harness {

namespace {

constexpr double kRateFloor = -1e-10;
constexpr double kChainFloor = -1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct TrialResult {
    std::size_t cell = 0;
    double total = 0.0;
    double worst_term = kInf;
    double mismatch = 0.0;
    double chain = 0.0;
    bool bottom = false;
    bool top = false;
    std::optional<Counterexample> failure;
};

CostFunction random_cost(Rng &rng, std::size_t d) {
    const auto coefficients = [&] {
        std::vector<double> c(1 + rng.index(d - 1));
        for (double &x : c) {
            x = rng.uniform() < 0.2 ? 0.0 : rng.uniform();
        }
        return c;
    };
    switch (rng.index(4)) {
    case 0:
        return CostFunction::phase_deviation();
    case 1:
        return CostFunction::reciprocal_peak_likelihood(d);
    case 2: {
        const double c0 = rng.uniform(-1.0, 1.0);
        const double slope = rng.uniform(0.1, 2.0);
        return CostFunction::affine(c0, coefficients(), slope);
    }
    default: {
        const double c0 = -0.1 - rng.uniform();
        return CostFunction::with_map(UncertaintyMap::ReciprocalPeakLikelihood, c0, coefficients(),
                                      "reciprocal_custom");
    }
    }
}

double mismatch(double analytic, double numeric) {
    return std::abs(analytic - numeric) /
           std::max({std::abs(analytic), std::abs(numeric), 1e-4});
}

bool agrees(double analytic, double numeric) {
    const double scale = std::max(std::abs(analytic), std::abs(numeric));
    return std::abs(analytic - numeric) <= std::max(1e-8 * scale, 1e-12);
}

std::string complex_text(Complex z) {
    return fmt::format("{}{:+.16e}i", format_double(z.real()), z.imag());
}

std::string dump_trial(const Spectrum &spectrum, std::uint64_t seed, const CostFunction &cost,
                       const DensityMatrix &rho, const CovariantGenerator &gen,
                       const CostDerivative &analytic,
                       const std::vector<std::vector<double>> &numeric, double numeric_total) {
    std::string out;
    out += fmt::format("spectrum: {} {}\n", to_string(spectrum.kind()), spectrum.dim());
    out += fmt::format("trial_seed: {}\n", seed);
    out += fmt::format("cost: {} c0={} c=[{}]\n", cost.name(), format_double(cost.c0()),
                       fmt::join(cost.coefficients(), " "));
    out += "state:\n";
    for (Eigen::Index i = 0; i < rho.entries().rows(); ++i) {
        std::vector<std::string> row;
        for (Eigen::Index j = 0; j < rho.entries().cols(); ++j) {
            row.push_back(complex_text(rho.entries()(i, j)));
        }
        out += fmt::format("  {}\n", fmt::join(row, " "));
    }
    out += "generator:\n";
    for (const CovariantTerm &term : gen.terms()) {
        std::vector<std::string> w;
        for (const Complex &z : term.weight) {
            w.push_back(complex_text(z));
        }
        out += fmt::format("  shift {}: {}\n", term.shift, fmt::join(w, " "));
    }
    out += "rates (term, k, analytic, numeric):\n";
    for (const TermRate &rate : analytic.term_rates) {
        out += fmt::format("  {} {} {} {}\n", rate.term, rate.k, format_double(rate.total()),
                           format_double(numeric[rate.term][rate.k - 1]));
    }
    out += fmt::format("total: analytic {} numeric {}\n", format_double(analytic.total),
                       format_double(numeric_total));
    return out;
}

TrialResult run_trial(const VerifyOptions &options, std::size_t index) {
    const std::size_t per_kind = options.trials;
    const std::size_t kind_index = index / per_kind;
    const std::size_t local = index % per_kind;
    const std::size_t dim_index = local % options.dims.size();
    const Spectrum spectrum(options.kinds[kind_index], options.dims[dim_index]);
    const std::size_t d = spectrum.dim();
    const std::uint64_t seed = options.seed ^ static_cast<std::uint64_t>(index);

    Rng rng(seed);
    const std::size_t rank = 1 + rng.index(4);
    const DensityMatrix base = random_phase_pure(spectrum, rng.next(), rank);
    std::vector<double> phases(d);
    for (double &p : phases) {
        p = rng.uniform(0.0, kTwoPi);
    }
    const DensityMatrix rho = apply_diagonal_phases(base, phases);
    const CovariantGenerator gen = random_covariant_generator(spectrum, rng.next());
    const CostFunction cost = random_cost(rng, d);

    const PhasePureDecomposition decomp = require_phase_pure(rho);
    CostDerivative analytic = cost_derivative_analytic(gen, rho, decomp, cost);
    if (options.inject_sign_flip) {
        for (double &r : analytic.moment_rates) {
            r = -r;
        }
        for (TermRate &t : analytic.term_rates) {
            t.bulk = -t.bulk;
            t.bottom_boundary = -t.bottom_boundary;
            t.top_boundary = -t.top_boundary;
        }
        analytic.total = -analytic.total;
    }
    const auto numeric = term_rates_numeric(gen, rho, decomp, cost.order());
    const double numeric_total = cost_derivative_numeric(gen, rho, decomp, cost);

    TrialResult result;
    result.cell = kind_index * options.dims.size() + dim_index;
    result.total = analytic.total;
    result.chain = uncertainty_rate(analytic, rho, decomp, cost);
    std::vector<std::string> failed;
    bool oracle_ok = agrees(analytic.total, numeric_total);
    result.mismatch = mismatch(analytic.total, numeric_total);
    for (const TermRate &rate : analytic.term_rates) {
        const double n = numeric[rate.term][rate.k - 1];
        oracle_ok = oracle_ok && agrees(rate.total(), n);
        result.mismatch = std::max(result.mismatch, mismatch(rate.total(), n));
        result.worst_term = std::min(result.worst_term, rate.total());
        result.bottom = result.bottom || rate.bottom_boundary != 0.0;
        result.top = result.top || rate.top_boundary != 0.0;
    }
    for (double r : analytic.moment_rates) {
        result.worst_term = std::min(result.worst_term, r);
    }
    if (result.worst_term < kRateFloor) {
        failed.emplace_back("negative_term");
    }
    if (result.total < kRateFloor) {
        failed.emplace_back("negative_total");
    }
    if (!oracle_ok) {
        failed.emplace_back("oracle_mismatch");
    }
    if (result.chain < kChainFloor) {
        failed.emplace_back("negative_uncertainty_rate");
    }
    if (!failed.empty()) {
        result.failure = Counterexample{
            index, seed, fmt::format("{}", fmt::join(failed, "+")),
            dump_trial(spectrum, seed, cost, rho, gen, analytic, numeric, numeric_total)};
    }
    return result;
}

std::string cell_row(const std::string &kind, const std::string &dim, std::size_t trials,
                     std::size_t passed, double total, double term, double mis, double chain,
                     std::size_t bottom, std::size_t top) {
    return fmt::format("{},{},{},{},{},{},{},{},{},{}\n", kind, dim, trials, passed,
                       format_double(total), format_double(term), format_double(mis),
                       format_double(chain), bottom, top);
}

std::string settings_text(const VerifyOptions &o) {
    std::vector<std::string_view> kinds;
    for (SpectrumKind k : o.kinds) {
        kinds.push_back(to_string(k));
    }
    return fmt::format("dims={}\ninject_sign_flip={}\nkinds={}\nseed={}\ntrials={}\n",
                       fmt::join(o.dims, ","), o.inject_sign_flip ? 1 : 0, fmt::join(kinds, ","),
                       o.seed, o.trials);
}

} // namespace

VerificationReport run_verify(const VerifyOptions &options) {
    if (options.trials == 0 || options.dims.empty() || options.kinds.empty()) {
        throw std::invalid_argument("verify needs at least one trial, dimension and kind");
    }
    for (std::size_t d : options.dims) {
        if (d < 2) {
            throw std::invalid_argument("verify dimensions must be at least 2");
        }
    }
    const std::size_t total = options.trials * options.kinds.size();
    std::vector<TrialResult> results(total);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            results[i] = run_trial(options, i);
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, total);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }

    VerificationReport report;
    report.options = options;
    report.cells.resize(options.kinds.size() * options.dims.size());
    for (std::size_t k = 0; k < options.kinds.size(); ++k) {
        for (std::size_t j = 0; j < options.dims.size(); ++j) {
            VerifyCell &cell = report.cells[k * options.dims.size() + j];
            cell.kind = options.kinds[k];
            cell.dim = options.dims[j];
            cell.worst_total = kInf;
            cell.worst_term = kInf;
            cell.worst_chain = kInf;
        }
    }
    report.worst_total = kInf;
    report.worst_term = kInf;
    report.worst_chain = kInf;
    for (TrialResult &r : results) {
        VerifyCell &cell = report.cells[r.cell];
        ++cell.trials;
        ++report.attempted;
        if (!r.failure) {
            ++cell.passed;
            ++report.passed;
        } else {
            report.counterexamples.push_back(std::move(*r.failure));
        }
        cell.worst_total = std::min(cell.worst_total, r.total);
        cell.worst_term = std::min(cell.worst_term, r.worst_term);
        cell.worst_mismatch = std::max(cell.worst_mismatch, r.mismatch);
        cell.worst_chain = std::min(cell.worst_chain, r.chain);
        cell.bottom_boundary_trials += r.bottom ? 1 : 0;
        cell.top_boundary_trials += r.top ? 1 : 0;
        report.worst_total = std::min(report.worst_total, r.total);
        report.worst_term = std::min(report.worst_term, r.worst_term);
        report.worst_mismatch = std::max(report.worst_mismatch, r.mismatch);
        report.worst_chain = std::min(report.worst_chain, r.chain);
    }
    std::erase_if(report.cells, [](const VerifyCell &c) { return c.trials == 0; });
    return report;
}

std::string report_csv(const VerificationReport &report) {
    CsvHeader header{sha256_hex(settings_text(report.options)), report.options.seed, {}};
    header.extra.emplace_back("result", report.pass() ? "pass" : "fail");
    CsvWriter csv(header, {"kind", "dim", "trials", "passed", "worst_total", "worst_term",
                           "worst_mismatch", "worst_chain", "bottom_boundary_trials",
                           "top_boundary_trials"});
    std::string text = csv.text();
    std::size_t bottom = 0;
    std::size_t top = 0;
    for (const VerifyCell &c : report.cells) {
        text += cell_row(std::string(to_string(c.kind)), std::to_string(c.dim), c.trials, c.passed,
                         c.worst_total, c.worst_term, c.worst_mismatch, c.worst_chain,
                         c.bottom_boundary_trials, c.top_boundary_trials);
        bottom += c.bottom_boundary_trials;
        top += c.top_boundary_trials;
    }
    text += cell_row("all", "all", report.attempted, report.passed, report.worst_total,
                     report.worst_term, report.worst_mismatch, report.worst_chain, bottom, top);
    return text;
}

std::string summary_line(const VerificationReport &report) {
    return fmt::format("verify: {} {}/{} trials, worst total {}, worst term {}, worst mismatch {}, "
                       "worst uncertainty rate {}, counterexamples {}",
                       report.pass() ? "PASS" : "FAIL", report.passed, report.attempted,
                       format_double(report.worst_total), format_double(report.worst_term),
                       format_double(report.worst_mismatch), format_double(report.worst_chain),
                       report.counterexamples.size());
}

std::string counterexample_text(const VerificationReport &report) {
    std::string out = "settings:\n" + settings_text(report.options);
    for (const Counterexample &c : report.counterexamples) {
        out += fmt::format("== trial {} (seed {}): {}\n{}", c.index, c.seed, c.check, c.dump);
    }
    return out;
}

} // namespace phasecov::harness
