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

#include "phasecov/harness/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "phasecov/error.hpp"

namespace phasecov::harness {

ConfigError::ConfigError(std::string field, std::size_t line, const std::string &message)
    : std::runtime_error(line > 0 ? fmt::format("line {}: {}: {}", line, field, message)
                                  : fmt::format("{}: {}", field, message)),
      field_(std::move(field)),
      line_(line) {}

namespace {

const std::set<std::string, std::less<>> kKnownKeys{
    "seed",
    "spectrum.kind", "spectrum.dim",
    "state.which", "state.n", "state.alpha", "state.nbar", "state.seed", "state.rank",
    "state.support_begin", "state.support_count",
    "generator.kind", "generator.term", "generator.scale", "generator.u", "generator.v",
    "generator.seed", "generator.max_shift", "generator.terms_per_shift", "generator.preserving",
    "cost.names",
    "run.t_end", "run.dt", "run.stride", "run.direction", "run.t_pre", "run.extend",
    "run.epsilon_tail", "run.tail_policy", "run.check_halving",
    "output.grid", "output.moments", "output.trajectory", "output.phase_dist", "output.svg",
    "output.report",
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_words(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ',') {
            ++i;
        }
        if (i > start) {
            out.push_back(s.substr(start, i - start));
        }
    }
    return out;
}

struct Entry {
    std::string value;
    std::size_t line;
};

class Fields {
  public:
    void add(std::string key, Entry entry) { entries_[std::move(key)].push_back(std::move(entry)); }

    [[nodiscard]] const Entry *find(std::string_view key) const {
        const auto it = entries_.find(std::string(key));
        return it == entries_.end() ? nullptr : &it->second.front();
    }
    [[nodiscard]] std::vector<Entry> all(std::string_view key) const {
        const auto it = entries_.find(std::string(key));
        return it == entries_.end() ? std::vector<Entry>{} : it->second;
    }
    [[nodiscard]] const std::map<std::string, std::vector<Entry>> &entries() const {
        return entries_;
    }

  private:
    std::map<std::string, std::vector<Entry>> entries_;
};

double to_double(std::string_view key, const Entry &e, std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw ConfigError(std::string(key), e.line, fmt::format("'{}' is not a number", text));
    }
    return value;
}

template <typename Int>
Int to_integer(std::string_view key, const Entry &e, std::string_view text) {
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError(std::string(key), e.line, fmt::format("'{}' is not an integer", text));
    }
    return value;
}

Complex to_complex(std::string_view key, const Entry &e, std::string_view text) {
    const std::size_t at = text.find('@');
    if (at == std::string_view::npos) {
        return {to_double(key, e, text), 0.0};
    }
    const double r = to_double(key, e, text.substr(0, at));
    const double theta = to_double(key, e, text.substr(at + 1));
    return std::polar(r, theta);
}

bool to_bool(std::string_view key, const Entry &e) {
    if (e.value == "true" || e.value == "1") {
        return true;
    }
    if (e.value == "false" || e.value == "0") {
        return false;
    }
    throw ConfigError(std::string(key), e.line, fmt::format("'{}' is not a boolean", e.value));
}

class Reader {
  public:
    explicit Reader(const Fields &fields) : fields_(fields) {}

    template <typename T, typename Parse>
    void read(std::string_view key, T &out, Parse parse) const {
        if (const Entry *e = fields_.find(key)) {
            out = parse(key, *e);
        }
    }

    void real(std::string_view key, double &out) const {
        read(key, out, [](auto k, const Entry &e) { return to_double(k, e, e.value); });
    }
    void positive(std::string_view key, double &out) const {
        if (const Entry *e = fields_.find(key)) {
            out = to_double(key, *e, e->value);
            if (!(out > 0.0)) {
                throw ConfigError(std::string(key), e->line, "must be positive");
            }
        }
    }
    template <typename Int>
    void integer(std::string_view key, Int &out) const {
        read(key, out, [](auto k, const Entry &e) { return to_integer<Int>(k, e, e.value); });
    }
    void boolean(std::string_view key, bool &out) const {
        read(key, out, [](auto k, const Entry &e) { return to_bool(k, e); });
    }
    void text(std::string_view key, std::string &out) const {
        read(key, out, [](auto, const Entry &e) { return e.value; });
    }
    void path(std::string_view key, std::filesystem::path &out) const {
        read(key, out, [](auto, const Entry &e) { return std::filesystem::path(e.value); });
    }
    [[nodiscard]] std::vector<double> reals(std::string_view key, const Entry &e) const {
        std::vector<double> out;
        for (std::string_view word : split_words(e.value)) {
            out.push_back(to_double(key, e, word));
        }
        return out;
    }
    [[nodiscard]] std::size_t line_of(std::string_view key) const {
        const Entry *e = fields_.find(key);
        return e ? e->line : 0;
    }

  private:
    const Fields &fields_;
};

Fields tokenize(std::string_view text) {
    Fields fields;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(std::string(line), line_no, "expected key = value");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (!kKnownKeys.contains(key)) {
            throw ConfigError(key, line_no, "unknown key");
        }
        if (value.empty()) {
            throw ConfigError(key, line_no, "missing value");
        }
        if (key != "generator.term" && fields.find(key) != nullptr) {
            throw ConfigError(key, line_no, "duplicate key");
        }
        fields.add(key, {value, line_no});
    }
    return fields;
}

std::string canonical_text(const Fields &fields) {
    std::string out;
    for (const auto &[key, entries] : fields.entries()) {
        for (const Entry &e : entries) {
            out += key;
            out += '=';
            out += e.value;
            out += '\n';
        }
    }
    return out;
}

TermSpec parse_term(const Entry &e, std::size_t dim) {
    constexpr std::string_view key = "generator.term";
    const std::size_t colon = e.value.find(':');
    if (colon == std::string::npos) {
        throw ConfigError(std::string(key), e.line, "expected 'shift : weights'");
    }
    TermSpec term;
    term.shift = to_integer<int>(key, e, trim(std::string_view(e.value).substr(0, colon)));
    for (std::string_view word : split_words(std::string_view(e.value).substr(colon + 1))) {
        term.weight.push_back(to_complex(key, e, word));
    }
    if (term.weight.size() != dim) {
        throw ConfigError(std::string(key), e.line,
                          fmt::format("{} weights given, spectrum.dim is {}", term.weight.size(),
                                      dim));
    }
    if (static_cast<std::size_t>(std::abs(term.shift)) >= dim) {
        throw ConfigError(std::string(key), e.line, "shift must satisfy |shift| < spectrum.dim");
    }
    return term;
}

} // namespace

ExperimentConfig parse_config(std::string_view text) {
    const Fields fields = tokenize(text);
    const Reader r(fields);
    ExperimentConfig config;

    r.integer("seed", config.seed);

    const Entry *kind = fields.find("spectrum.kind");
    const Entry *dim = fields.find("spectrum.dim");
    if (kind == nullptr) {
        throw ConfigError("spectrum.kind", 0, "required");
    }
    if (dim == nullptr) {
        throw ConfigError("spectrum.dim", 0, "required");
    }
    const auto parsed_kind = parse_spectrum_kind(kind->value);
    if (!parsed_kind) {
        throw ConfigError("spectrum.kind", kind->line, "expected nat, int or cyclic");
    }
    const auto d = to_integer<std::size_t>("spectrum.dim", *dim, dim->value);
    if (d == 0) {
        throw ConfigError("spectrum.dim", dim->line, "must be at least 1");
    }
    config.spectrum = Spectrum(*parsed_kind, d);

    StateSpec &state = config.state;
    state.seed = config.seed;
    r.text("state.which", state.which);
    r.integer("state.n", state.label);
    r.read("state.alpha", state.alpha,
           [](auto k, const Entry &e) { return to_complex(k, e, e.value); });
    r.real("state.nbar", state.mean_number);
    r.integer("state.seed", state.seed);
    r.integer("state.rank", state.rank);
    if (fields.find("state.support_begin") || fields.find("state.support_count")) {
        Support support{0, d};
        r.integer("state.support_begin", support.begin);
        r.integer("state.support_count", support.count);
        if (support.count == 0 || support.begin + support.count > d) {
            throw ConfigError("state.support_count", r.line_of("state.support_count"),
                              "support window does not fit the spectrum");
        }
        state.support = support;
    }
    static const std::set<std::string, std::less<>> kStates{"fock", "uniform", "coherent",
                                                            "thermal", "random"};
    if (!kStates.contains(state.which)) {
        throw ConfigError("state.which", r.line_of("state.which"),
                          "expected fock, uniform, coherent, thermal or random");
    }
    if (state.which == "random" && state.rank == 0) {
        throw ConfigError("state.rank", r.line_of("state.rank"), "must be at least 1");
    }

    GeneratorSpec &gen = config.generator;
    gen.seed = config.seed;
    r.text("generator.kind", gen.kind);
    static const std::set<std::string, std::less<>> kGenerators{"empty", "explicit", "dephasing",
                                                                "preserving", "random"};
    if (!kGenerators.contains(gen.kind)) {
        throw ConfigError("generator.kind", r.line_of("generator.kind"),
                          "expected empty, explicit, dephasing, preserving or random");
    }
    for (const Entry &e : fields.all("generator.term")) {
        gen.terms.push_back(parse_term(e, d));
    }
    if (gen.kind == "explicit" && gen.terms.empty()) {
        throw ConfigError("generator.term", 0, "explicit generator needs at least one term");
    }
    if (gen.kind != "explicit" && !gen.terms.empty()) {
        throw ConfigError("generator.term", fields.all("generator.term").front().line,
                          "terms are only read when generator.kind = explicit");
    }
    r.real("generator.scale", gen.scale);
    if (const Entry *e = fields.find("generator.u")) {
        gen.u = r.reals("generator.u", *e);
    }
    if (const Entry *e = fields.find("generator.v")) {
        gen.v = r.reals("generator.v", *e);
    }
    if (gen.kind == "preserving" && gen.u.empty()) {
        throw ConfigError("generator.u", 0, "preserving generator needs raising rates");
    }
    r.integer("generator.seed", gen.seed);
    r.integer("generator.max_shift", gen.random.max_shift);
    r.integer("generator.terms_per_shift", gen.random.terms_per_shift);
    r.boolean("generator.preserving", gen.random.purity_preserving);

    if (const Entry *e = fields.find("cost.names")) {
        config.cost_names.clear();
        for (std::string_view word : split_words(e->value)) {
            if (word != "phase_deviation" && word != "reciprocal_peak_likelihood") {
                throw ConfigError("cost.names", e->line,
                                  fmt::format("unknown cost '{}'", word));
            }
            config.cost_names.emplace_back(word);
        }
    }

    RunSpec &run = config.run;
    r.positive("run.t_end", run.t_end);
    r.positive("run.dt", run.dt);
    r.integer("run.stride", run.stride);
    if (run.stride == 0) {
        throw ConfigError("run.stride", r.line_of("run.stride"), "must be at least 1");
    }
    if (const Entry *e = fields.find("run.direction")) {
        if (e->value == "forward") {
            run.direction = Direction::Forward;
        } else if (e->value == "reversed") {
            run.direction = Direction::Reversed;
        } else {
            throw ConfigError("run.direction", e->line, "expected forward or reversed");
        }
    }
    if (fields.find("run.t_pre")) {
        double t_pre = 0.0;
        r.positive("run.t_pre", t_pre);
        run.t_pre = t_pre;
    }
    if (fields.find("run.extend")) {
        double extend = 0.0;
        r.positive("run.extend", extend);
        run.extend = extend;
    }
    r.positive("run.epsilon_tail", run.epsilon_tail);
    if (const Entry *e = fields.find("run.tail_policy")) {
        if (e->value == "error") {
            run.tail_policy = TailPolicy::Error;
        } else if (e->value == "flag") {
            run.tail_policy = TailPolicy::Flag;
        } else {
            throw ConfigError("run.tail_policy", e->line, "expected error or flag");
        }
    }
    r.boolean("run.check_halving", run.check_halving);

    OutputSpec &out = config.output;
    r.integer("output.grid", out.grid);
    if (out.grid == 0) {
        out.grid = 8 * d;
    }
    if (out.grid < 2 * d) {
        throw ConfigError("output.grid", r.line_of("output.grid"),
                          fmt::format("needs at least 2 * spectrum.dim = {} points", 2 * d));
    }
    r.integer("output.moments", out.moments);
    if (out.moments >= d && d > 1) {
        throw ConfigError("output.moments", r.line_of("output.moments"),
                          "moment order must be below spectrum.dim");
    }
    r.path("output.trajectory", out.trajectory);
    r.path("output.phase_dist", out.phase_dist);
    if (fields.find("output.svg")) {
        std::filesystem::path svg;
        r.path("output.svg", svg);
        out.svg = svg;
    }
    r.path("output.report", out.report);

    config.canonical = canonical_text(fields);
    config.digest = sha256_hex(config.canonical);
    return config;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path.string(), 0, "cannot open config file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

DensityMatrix build_state(const ExperimentConfig &config) {
    const StateSpec &s = config.state;
    const Spectrum &spectrum = config.spectrum;
    if (s.which == "fock") {
        return standard_state(spectrum, FockState{s.label});
    }
    if (s.which == "uniform") {
        return standard_state(spectrum, UniformPhaseState{});
    }
    if (s.which == "coherent") {
        return standard_state(spectrum, TruncatedCoherentState{s.alpha});
    }
    if (s.which == "thermal") {
        return standard_state(spectrum, ThermalState{s.mean_number});
    }
    return random_phase_pure(spectrum, s.seed, s.rank, s.support);
}

CovariantGenerator build_generator(const ExperimentConfig &config) {
    const GeneratorSpec &g = config.generator;
    const Spectrum &spectrum = config.spectrum;
    if (g.kind == "explicit") {
        CovariantGenerator gen(spectrum);
        for (const TermSpec &term : g.terms) {
            gen.add_term(term.shift, term.weight);
        }
        return gen;
    }
    if (g.kind == "dephasing") {
        std::vector<Complex> weight;
        for (int label : spectrum.labels()) {
            weight.emplace_back(g.scale * label);
        }
        CovariantGenerator gen(spectrum);
        gen.add_term(0, std::move(weight));
        return gen;
    }
    if (g.kind == "preserving") {
        return build_preserving_generator(spectrum, g.u, g.v);
    }
    if (g.kind == "random") {
        return random_covariant_generator(spectrum, g.seed, g.random);
    }
    return CovariantGenerator(spectrum);
}

std::vector<CostFunction> build_costs(const ExperimentConfig &config) {
    std::vector<CostFunction> costs;
    for (const std::string &name : config.cost_names) {
        if (name == "phase_deviation") {
            costs.push_back(CostFunction::phase_deviation());
        } else {
            costs.push_back(CostFunction::reciprocal_peak_likelihood(config.spectrum.dim()));
        }
    }
    return costs;
}

std::string sha256_hex(std::string_view text) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr);
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += fmt::format("{:02x}", digest[i]);
    }
    return out;
}

} // namespace phasecov::harness
