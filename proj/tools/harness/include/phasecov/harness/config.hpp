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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "phasecov/cost_function.hpp"
#include "phasecov/generator.hpp"
#include "phasecov/integrator.hpp"
#include "phasecov/states.hpp"

namespace phasecov::harness {

/// Malformed or inconsistent configuration. line() is 0 when the problem is
/// a missing key rather than a specific line.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string field, std::size_t line, const std::string &message);

    [[nodiscard]] const std::string &field() const noexcept { return field_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::string field_;
    std::size_t line_;
};

struct StateSpec {
    std::string which = "uniform";  ///< fock | uniform | coherent | thermal | random
    int label = 0;
    Complex alpha{1.0, 0.0};
    double mean_number = 1.0;
    std::uint64_t seed = 0;
    std::size_t rank = 1;
    std::optional<Support> support;
};

struct TermSpec {
    int shift = 0;
    std::vector<Complex> weight;
};

struct GeneratorSpec {
    std::string kind = "empty";  ///< empty | explicit | dephasing | preserving | random
    std::vector<TermSpec> terms;
    double scale = 1.0;
    std::vector<double> u;
    std::optional<std::vector<double>> v;
    std::uint64_t seed = 0;
    RandomGeneratorOptions random;
};

struct RunSpec {
    double t_end = 1.0;
    double dt = 1e-3;
    std::size_t stride = 1;
    Direction direction = Direction::Forward;
    /// Forward pre-evolution time of a reversal demo.
    std::optional<double> t_pre;
    /// Length of the reversed leg of a reversal demo; defaults to t_pre.
    std::optional<double> extend;
    double epsilon_tail = 1e-8;
    TailPolicy tail_policy = TailPolicy::Error;
    bool check_halving = false;
};

struct OutputSpec {
    std::size_t grid = 0;  ///< 0 selects 8 d
    std::size_t moments = 0;
    std::filesystem::path trajectory = "trajectory.csv";
    std::filesystem::path phase_dist = "phase_dist.csv";
    std::optional<std::filesystem::path> svg;
    std::filesystem::path report = "reversal_report.csv";
};

struct ExperimentConfig {
    std::uint64_t seed = 0;
    Spectrum spectrum = Spectrum::naturals(1);
    StateSpec state;
    GeneratorSpec generator;
    std::vector<std::string> cost_names{"phase_deviation"};
    RunSpec run;
    OutputSpec output;
    /// Sorted key=value lines; the digest is taken over this text.
    std::string canonical;
    std::string digest;
};

/**
 * Parses the flat key=value format. Keys are `section.name` or a bare
 * `seed`; '#' starts a comment; generator.term may repeat and has the form
 * `shift : w_0 w_1 ... w_{d-1}` with each weight real or `r@theta`.
 */
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path &path);

DensityMatrix build_state(const ExperimentConfig &config);
CovariantGenerator build_generator(const ExperimentConfig &config);
std::vector<CostFunction> build_costs(const ExperimentConfig &config);

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view text);

} // namespace phasecov::harness
