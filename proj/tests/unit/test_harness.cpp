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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "phasecov/error.hpp"
#include "phasecov/harness/config.hpp"
#include "phasecov/harness/csv.hpp"
#include "phasecov/harness/experiments.hpp"
#include "phasecov/harness/verify.hpp"

using namespace phasecov;
using namespace phasecov::harness;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string &name) {
    const fs::path dir = fs::temp_directory_path() / ("phasecov_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const std::string kDephasing = R"(seed = 1
spectrum.kind = cyclic
spectrum.dim = 2
state.which = uniform
generator.kind = dephasing
cost.names = phase_deviation
run.t_end = 1
run.dt = 1e-3
run.stride = 100
output.svg = plot.svg
)";

ConfigError config_error(const std::string &text) {
    try {
        parse_config(text);
    } catch (const ConfigError &e) {
        return e;
    }
    FAIL("expected a ConfigError");
    return {"", 0, ""};
}

double last_value(const CsvTable &table, const std::string &column) {
    const std::ptrdiff_t c = table.column(column);
    REQUIRE(c >= 0);
    return table.rows.back()[static_cast<std::size_t>(c)];
}

} // namespace

TEST_CASE("config parsing", "[harness][config]") {
    SECTION("defaults and values") {
        const ExperimentConfig c = parse_config(kDephasing);
        CHECK(c.seed == 1);
        CHECK(c.spectrum == Spectrum::cyclic(2));
        CHECK(c.output.grid == 16);
        CHECK(c.run.stride == 100);
        CHECK(c.generator.kind == "dephasing");
        CHECK(c.digest.size() == 64);
    }
    SECTION("digest ignores layout and comments but not values") {
        const std::string shuffled = "# comment\nspectrum.dim=2\n\n" + kDephasing;
        CHECK_THROWS_AS(parse_config(shuffled), ConfigError);
        std::string reordered = kDephasing;
        reordered = "run.dt   =   1e-3  # step\n" +
                    reordered.replace(reordered.find("run.dt = 1e-3\n"), 14, "");
        CHECK(parse_config(reordered).digest == parse_config(kDephasing).digest);
        std::string changed = kDephasing;
        changed.replace(changed.find("seed = 1"), 8, "seed = 2");
        CHECK(parse_config(changed).digest != parse_config(kDephasing).digest);
    }
    SECTION("explicit terms") {
        const ExperimentConfig c = parse_config("spectrum.kind = nat\nspectrum.dim = 3\n"
                                                "generator.kind = explicit\n"
                                                "generator.term = 1 : 0 1 1@1.5707963267948966\n"
                                                "generator.term = -1 : 0.5, 0.5, 0.5\n");
        REQUIRE(c.generator.terms.size() == 2);
        CHECK(c.generator.terms[0].shift == 1);
        CHECK_THAT(c.generator.terms[0].weight[2].imag(), WithinAbs(1.0, 1e-15));
        CHECK(build_generator(c).terms().size() == 2);
    }
    SECTION("errors name the line and field") {
        ConfigError e = config_error("spectrum.kind = nat\nspectrum.dim = 3\nstate.wich = fock\n");
        CHECK(e.line() == 3);
        CHECK(e.field() == "state.wich");

        e = config_error("spectrum.kind = nat\nspectrum.dim = 3\nrun.dt = fast\n");
        CHECK(e.line() == 3);
        CHECK_THAT(std::string(e.what()), ContainsSubstring("run.dt"));

        e = config_error("spectrum.kind = nat\nspectrum.dim = 3\ngenerator.kind = explicit\n"
                         "generator.term = 1 : 1 1\n");
        CHECK(e.line() == 4);
        CHECK(e.field() == "generator.term");

        e = config_error("spectrum.kind = nat\nspectrum.dim = 4\noutput.grid = 7\n");
        CHECK(e.field() == "output.grid");

        e = config_error("spectrum.dim = 4\n");
        CHECK(e.field() == "spectrum.kind");
        CHECK(e.line() == 0);

        e = config_error("spectrum.kind = nat\nspectrum.kind = int\n");
        CHECK(e.line() == 2);

        e = config_error("spectrum.kind = nat\nspectrum.dim = 4\nrun.dt = -1\n");
        CHECK(e.field() == "run.dt");

        e = config_error("spectrum.kind = nat\nspectrum.dim 4\n");
        CHECK(e.line() == 2);

        e = config_error("spectrum.kind = cylic\nspectrum.dim = 4\n");
        CHECK(e.field() == "spectrum.kind");
    }
}

TEST_CASE("csv formatting", "[harness][csv]") {
    CHECK(format_double(0.1) == "1.0000000000000001e-01");
    CHECK(format_double(-2.0) == "-2.0000000000000000e+00");
    CHECK(std::stod(format_double(M_PI)) == M_PI);
    CsvWriter csv({"abc", 9, {{"note", "x"}}}, {"a", "b"});
    csv.row({1.0, 2.0});
    CHECK(csv.text() == "# tool: phasecov 0.1.0\n# config_sha256: abc\n# seed: 9\n# note: x\n"
                        "a,b\n1.0000000000000000e+00,2.0000000000000000e+00\n");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("simulate writes the dephasing trajectory", "[harness][simulate]") {
    const fs::path dir = scratch("simulate");
    const ExperimentConfig config = parse_config(kDephasing);
    const SimulateResult result = run_simulate(config, dir);
    REQUIRE(result.files.size() == 3);

    const CsvTable traj = read_csv(dir / "trajectory.csv");
    CHECK(traj.columns.front() == "t");
    CHECK(traj.columns[4] == "moment_k1");
    CHECK(traj.columns[5] == "cost_phase_deviation");
    CHECK(traj.columns[6] == "delta_phi_phase_deviation");
    CHECK(traj.rows.size() == 11);
    const double rho01 = 0.5 * std::exp(-0.5);
    CHECK_THAT(last_value(traj, "t"), WithinAbs(1.0, 1e-15));
    CHECK_THAT(last_value(traj, "moment_k1"), WithinAbs(rho01, 1e-8));
    CHECK_THAT(last_value(traj, "delta_phi_phase_deviation"),
               WithinAbs(2.0 * (1.0 - rho01 * rho01), 1e-8));
    CHECK_THAT(last_value(traj, "delta_phi_phase_deviation"), WithinAbs(1.81606, 1e-5));
    CHECK_THAT(traj.rows.front()[6], WithinAbs(1.5, 1e-15));

    const std::string text = slurp(dir / "trajectory.csv");
    CHECK_THAT(text, ContainsSubstring("# config_sha256: " + config.digest));
    CHECK_THAT(text, ContainsSubstring("# seed: 1\n"));

    const CsvTable dist = read_csv(dir / "phase_dist.csv");
    CHECK(dist.columns.size() == 17);
    CHECK(dist.rows.size() == 11);
    CHECK_THAT(slurp(dir / "plot.svg"), ContainsSubstring("<polyline"));

    const fs::path again = scratch("simulate_again");
    run_simulate(config, again);
    for (const char *name : {"trajectory.csv", "phase_dist.csv", "plot.svg"}) {
        CHECK(slurp(dir / name) == slurp(again / name));
    }
}

TEST_CASE("simulate with empty and preserving generators", "[harness][simulate]") {
    SECTION("empty generator keeps every delta phi") {
        const fs::path dir = scratch("empty");
        const ExperimentConfig config =
            parse_config("spectrum.kind = cyclic\nspectrum.dim = 5\nstate.which = random\n"
                         "state.rank = 2\ncost.names = phase_deviation reciprocal_peak_likelihood\n"
                         "run.t_end = 0.2\nrun.dt = 0.01\n");
        run_simulate(config, dir);
        const CsvTable traj = read_csv(dir / "trajectory.csv");
        for (const char *col : {"delta_phi_phase_deviation", "delta_phi_reciprocal_peak_likelihood"}) {
            const auto c = static_cast<std::size_t>(traj.column(col));
            for (const auto &row : traj.rows) {
                REQUIRE(row[c] == traj.rows.front()[c]);
            }
        }
    }
    SECTION("preserving generator keeps moments and spreads the number") {
        const fs::path dir = scratch("preserving");
        const ExperimentConfig config = parse_config(
            "seed = 3\nspectrum.kind = nat\nspectrum.dim = 32\nstate.which = random\n"
            "state.rank = 2\nstate.support_begin = 0\nstate.support_count = 8\n"
            "generator.kind = preserving\ngenerator.u = 1\noutput.moments = 8\n"
            "run.t_end = 1\nrun.dt = 1e-3\nrun.stride = 50\n");
        run_simulate(config, dir);
        const CsvTable traj = read_csv(dir / "trajectory.csv");
        const auto var = static_cast<std::size_t>(traj.column("number_variance"));
        for (std::size_t k = 1; k <= 8; ++k) {
            const auto c = static_cast<std::size_t>(traj.column("moment_k" + std::to_string(k)));
            for (const auto &row : traj.rows) {
                REQUIRE(std::abs(row[c] - traj.rows.front()[c]) <= 1e-6);
            }
        }
        for (std::size_t i = 1; i < traj.rows.size(); ++i) {
            REQUIRE(traj.rows[i][var] >= traj.rows[i - 1][var]);
        }
    }
    SECTION("integrator failures propagate") {
        const ExperimentConfig config = parse_config(
            "spectrum.kind = nat\nspectrum.dim = 6\nstate.which = fock\n"
            "generator.kind = preserving\ngenerator.u = 1\nrun.t_end = 5\nrun.dt = 0.01\n");
        try {
            run_simulate(config, scratch("tail"));
            FAIL("expected TailOverflow");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::TailOverflow);
            CHECK(e.is_numerical());
        }
    }
}

TEST_CASE("reversal demo", "[harness][reverse]") {
    const std::string base = "spectrum.kind = cyclic\nspectrum.dim = 4\nstate.which = uniform\n"
                             "generator.kind = dephasing\nrun.t_pre = 1\nrun.dt = 1e-3\n"
                             "cost.names = phase_deviation reciprocal_peak_likelihood\n";
    SECTION("reversal retraces the forward run") {
        const fs::path dir = scratch("reverse");
        const ReversalResult r = run_reverse_demo(parse_config(base), dir);
        const Sample &start = r.forward.samples.front();
        const Sample &end = r.reversed.samples.back();
        for (std::size_t c = 0; c < 2; ++c) {
            CHECK_THAT(end.uncertainties[c], WithinAbs(start.uncertainties[c], 1e-6));
        }
        CHECK(r.max_recovery_error <= 1e-7);
        CHECK(r.min_delta_phi_decrease >= -1e-9);
        CHECK_FALSE(r.first_positivity_violation.has_value());
        const std::string report = slurp(dir / "reversal_report.csv");
        CHECK_THAT(report, ContainsSubstring("# first_positivity_violation: none"));
        CHECK_THAT(report, ContainsSubstring("delta_phi_decrease_phase_deviation"));
        const CsvTable traj = read_csv(dir / "trajectory.csv");
        CHECK(traj.columns.back() == "direction");
    }
    SECTION("extending past t_pre leaves the state space") {
        const ReversalResult r =
            run_reverse_demo(parse_config(base + "run.extend = 2\n"), scratch("extend"));
        REQUIRE(r.first_positivity_violation.has_value());
        CHECK(*r.first_positivity_violation > 1.0);
    }
    SECTION("fock state has nothing to squeeze") {
        std::string fock = base;
        fock.replace(fock.find("uniform"), 7, "fock\nstate.n = 2");
        const ReversalResult r = run_reverse_demo(parse_config(fock), scratch("fock"));
        for (const Sample &s : r.reversed.samples) {
            REQUIRE(s.uncertainties[0] == r.forward.samples.front().uncertainties[0]);
        }
    }
    SECTION("t_pre is required") {
        CHECK_THROWS_AS(run_reverse_demo(parse_config("spectrum.kind = cyclic\nspectrum.dim = 2\n"),
                                         scratch("missing")),
                        ConfigError);
    }
}

TEST_CASE("phase-dist dump", "[harness]") {
    const fs::path dir = scratch("phase_dist");
    const fs::path out = run_phase_dist(
        parse_config("spectrum.kind = nat\nspectrum.dim = 3\nstate.which = fock\nstate.n = 1\n"),
        dir);
    const CsvTable table = read_csv(out);
    REQUIRE(table.rows.size() == 24);
    for (const auto &row : table.rows) {
        CHECK_THAT(row[1], WithinAbs(1.0 / (2.0 * M_PI), 1e-15));
    }
}

TEST_CASE("verify", "[harness][verify]") {
    VerifyOptions options;
    options.trials = 40;
    options.dims = {2, 3, 5, 8};
    options.seed = 11;

    SECTION("passes and is reproducible") {
        const VerificationReport a = run_verify(options);
        CHECK(a.pass());
        CHECK(a.attempted == 120);
        CHECK(a.worst_total >= -1e-10);
        options.threads = 4;
        const VerificationReport b = run_verify(options);
        CHECK(report_csv(a) == report_csv(b));
        CHECK_THAT(summary_line(a), ContainsSubstring("PASS 120/120"));
    }
    SECTION("a sign-flipped formula is caught") {
        options.trials = 1;
        options.kinds = {SpectrumKind::CyclicFinite};
        options.dims = {4};
        options.inject_sign_flip = true;
        const VerificationReport r = run_verify(options);
        REQUIRE_FALSE(r.pass());
        REQUIRE(r.counterexamples.size() == 1);
        CHECK_THAT(r.counterexamples[0].check, ContainsSubstring("negative_term"));
        const std::string dump = counterexample_text(r);
        CHECK_THAT(dump, ContainsSubstring("state:"));
        CHECK_THAT(dump, ContainsSubstring("generator:"));
        CHECK_THAT(dump, ContainsSubstring("spectrum: cyclic 4"));
        CHECK_THAT(report_csv(r), ContainsSubstring("# result: fail"));
    }
    SECTION("different seeds give different trials") {
        const std::string a = report_csv(run_verify(options));
        options.seed = 12;
        CHECK(report_csv(run_verify(options)) != a);
    }
}
