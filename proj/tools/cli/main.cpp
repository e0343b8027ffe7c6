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

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "phasecov/error.hpp"
#include "phasecov/harness/config.hpp"
#include "phasecov/harness/csv.hpp"
#include "phasecov/harness/experiments.hpp"
#include "phasecov/harness/verify.hpp"

namespace {

namespace fs = std::filesystem;
namespace h = phasecov::harness;

enum Exit : int {
    kOk = 0,
    kCounterexample = 1,
    kConfigError = 2,
    kNumericalFailure = 3,
};

void list_files(const std::vector<fs::path> &files) {
    for (const fs::path &f : files) {
        fmt::print("wrote {}\n", f.string());
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Phase statistics and phase-covariant Lindblad dynamics"};
    app.set_version_flag("--version", std::string(h::tool_version()));
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";

    auto *simulate = app.add_subcommand("simulate", "Integrate a configured experiment");
    auto *reverse = app.add_subcommand("reverse", "Forward run followed by the reversed equation");
    auto *phase_dist = app.add_subcommand("phase-dist", "Dump p(phi) of the configured state");
    for (auto *sub : {simulate, reverse, phase_dist}) {
        sub->add_option("config", config_path, "Configuration file")->required();
        sub->add_option("--out", out_dir, "Directory for relative output paths");
    }

    h::VerifyOptions verify_options;
    std::vector<std::string> kind_names;
    std::string report_path = "verify_report.csv";
    std::string dump_path;
    auto *verify = app.add_subcommand("verify", "Randomized check of the cost-derivative identities");
    verify->add_option("--trials", verify_options.trials, "Trials per spectrum kind")
        ->check(CLI::PositiveNumber);
    verify->add_option("--dims", verify_options.dims, "Dimensions, comma separated")
        ->delimiter(',')
        ->check(CLI::Range(std::size_t{2}, std::size_t{4096}));
    verify->add_option("--kinds", kind_names, "Spectrum kinds: nat, int, cyclic")
        ->delimiter(',')
        ->check(CLI::IsMember({"nat", "int", "cyclic"}));
    verify->add_option("--seed", verify_options.seed, "Base seed");
    verify->add_option("--threads", verify_options.threads, "Worker threads")
        ->check(CLI::PositiveNumber);
    verify->add_option("--report", report_path, "Report CSV path");
    verify->add_option("--counterexamples", dump_path,
                       "Counterexample dump path (default: report path + .counterexamples.txt)");
    verify->add_flag("--inject-sign-flip", verify_options.inject_sign_flip,
                     "Self-test: negate the analytic rates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*verify) {
            if (!kind_names.empty()) {
                verify_options.kinds.clear();
                for (const std::string &name : kind_names) {
                    verify_options.kinds.push_back(*phasecov::parse_spectrum_kind(name));
                }
            }
            const h::VerificationReport report = h::run_verify(verify_options);
            h::write_file(report_path, h::report_csv(report));
            fmt::print("{}\n", h::summary_line(report));
            if (!report.pass()) {
                const fs::path dump =
                    dump_path.empty() ? fs::path(report_path + ".counterexamples.txt") : fs::path(dump_path);
                h::write_file(dump, h::counterexample_text(report));
                fmt::print(stderr, "{}", h::counterexample_text(report));
                fmt::print(stderr, "counterexamples written to {}\n", dump.string());
                return kCounterexample;
            }
            return kOk;
        }

        const h::ExperimentConfig config = h::load_config(config_path);
        if (*simulate) {
            list_files(h::run_simulate(config, out_dir).files);
        } else if (*reverse) {
            const h::ReversalResult result = h::run_reverse_demo(config, out_dir);
            list_files(result.files);
            fmt::print("max recovery error {}, first positivity violation {}\n",
                       h::format_double(result.max_recovery_error),
                       result.first_positivity_violation
                           ? h::format_double(*result.first_positivity_violation)
                           : std::string("none"));
        } else {
            list_files({h::run_phase_dist(config, out_dir)});
        }
        return kOk;
    } catch (const h::ConfigError &e) {
        fmt::print(stderr, "config error: {}\n", e.what());
        return kConfigError;
    } catch (const phasecov::Error &e) {
        fmt::print(stderr, "{}: {}\n", e.is_numerical() ? "numerical failure" : "invalid setup",
                   e.what());
        return e.is_numerical() ? kNumericalFailure : kConfigError;
    } catch (const std::exception &e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kConfigError;
    }
}
