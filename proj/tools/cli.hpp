// Copyright 2026 The oamq Authors
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

/**
 * @file
 * `oamq` command-line front end.
 *
 *   oamq compile  <circuit>  [-o program] [--no-opt] [--json]
 *   oamq simulate <program>  [--mode m | --state file] [--threshold t] [--json]
 *   oamq verify   <circuit>  [--trials k] [--tolerance t] [--seed s]
 *                            [--no-opt] [--skip-op i] [--json]
 *   oamq generate qft|ghz|random --n n [--depth k] [--seed s] [--gates set] [-o file]
 *   oamq cost     [file] [--components table] [--scaling gate --n-min a --n-max b] [--json]
 *
 * Exit codes: 0 success, 1 verification failure, 2 input error, 3 internal.
 */

#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oamq/oamq.hpp"
#include "oamq/serialize.hpp"

namespace oamq::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kInputError = 2,
    kInternalError = 3,
};

inline constexpr const char *kComponentsEnv = "OAMQ_COMPONENTS";

/// State vectors beyond this many qubits are refused by simulate and verify.
inline constexpr int kMaxSimulationQubits = 20;

namespace detail {

inline std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidInput("cannot write '" + path + "'");
    }
    out << text;
}

/// Parses and validates, mapping validation errors back to source lines.
inline Circuit load_circuit(const std::string &path) {
    ParsedCircuit parsed = parse_circuit(read_file(path));
    const auto errors = validate_circuit(parsed.circuit);
    if (!errors.empty()) {
        const auto &e = errors.front();
        throw ParseError(parsed.gate_lines[e.gate_index], e.message);
    }
    return std::move(parsed.circuit);
}

enum class FileKind { Circuit, Program, ProgramJson };

inline FileKind sniff(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        if (line[first] == '{') {
            return FileKind::ProgramJson;
        }
        std::istringstream fields(line);
        std::string word;
        fields >> word;
        return word == "qubits" ? FileKind::Circuit : FileKind::Program;
    }
    throw InvalidInput("empty input file");
}

inline ElementaryProgram load_program(const std::string &path) {
    const std::string text = read_file(path);
    if (sniff(text) == FileKind::ProgramJson) {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::exception &e) {
            throw InvalidInput(std::string("invalid JSON: ") + e.what());
        }
        return program_from_json(j);
    }
    return parse_program(text);
}

inline ComponentTable load_components(const std::string &flag_path) {
    std::string path = flag_path;
    if (path.empty()) {
        if (const char *env = std::getenv(kComponentsEnv); env != nullptr) {
            path = env;
        }
    }
    if (path.empty()) {
        return default_component_table();
    }
    std::istringstream in(read_file(path));
    return parse_component_table(in);
}

inline void require_simulable(QubitCount n) {
    if (n.value() > kMaxSimulationQubits) {
        throw ResourceError("simulation limited to n <= " +
                            std::to_string(kMaxSimulationQubits) + ", got " +
                            std::to_string(n.value()));
    }
}

inline std::string full(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

inline void print_counts(std::ostream &out, const OpCounts &c) {
    out << "ops: PHASE=" << c[OpKind::Phase] << " H=" << c[OpKind::Had]
        << " CPERM=" << c[OpKind::CPerm] << " CZ=" << c[OpKind::Cz4]
        << " total=" << c.total() << '\n';
}

} // namespace detail

// ---------------------------------------------------------------------------

struct CompileArgs {
    std::string input;
    std::string output;
    bool no_opt = false;
    bool json = false;
};

inline int cmd_compile(const CompileArgs &a, std::ostream &out, std::ostream &err) {
    const Circuit circ = detail::load_circuit(a.input);
    const CompileResult r = compile_circuit(circ, {.optimize = !a.no_opt});
    if (!a.output.empty()) {
        detail::write_file(a.output, format_program(r.program));
    }
    if (a.json) {
        out << Json{{"program", to_json(r.program)}, {"stats", to_json(r.stats)}}.dump(2)
            << '\n';
        return kOk;
    }
    std::ostream &stats_out = a.output.empty() ? err : out;
    if (a.output.empty()) {
        write_program(out, r.program);
    }
    stats_out << "gates: " << circ.gates.size() << '\n';
    detail::print_counts(stats_out, r.stats.totals);
    stats_out << "global_phase: " << detail::full(r.stats.global_phase) << '\n';
    return kOk;
}

struct SimulateArgs {
    std::string input;
    std::uint64_t mode = 0;
    std::string state_file;
    double threshold = 1e-12;
    bool json = false;
};

inline int cmd_simulate(const SimulateArgs &a, std::ostream &out, std::ostream &) {
    const ElementaryProgram prog = detail::load_program(a.input);
    detail::require_simulable(prog.n);
    OamState state = [&] {
        if (!a.state_file.empty()) {
            std::istringstream in(detail::read_file(a.state_file));
            return parse_state(in, prog.n);
        }
        return OamState(prog.n, a.mode);
    }();
    apply_program(state, prog);

    if (a.json) {
        Json listed = Json::array();
        for (std::size_t m = 0; m < state.dim(); ++m) {
            const double p = std::norm(state[m]);
            if (p >= a.threshold) {
                listed.push_back({{"mode", m}, {"probability", p}});
            }
        }
        Json j = to_json(state);
        j["probabilities"] = std::move(listed);
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "mode probability re im\n";
    for (std::size_t m = 0; m < state.dim(); ++m) {
        const double p = std::norm(state[m]);
        if (p >= a.threshold) {
            out << m << ' ' << detail::full(p) << ' ' << detail::full(state[m].real())
                << ' ' << detail::full(state[m].imag()) << '\n';
        }
    }
    return kOk;
}

struct VerifyArgs {
    std::string input;
    int trials = 20;
    double tolerance = 1e-9;
    std::uint64_t seed = 1;
    bool no_opt = false;
    std::optional<std::size_t> skip_op;
    bool json = false;
};

inline int cmd_verify(const VerifyArgs &a, std::ostream &out, std::ostream &) {
    if (a.trials < 1) {
        throw InvalidInput("--trials must be at least 1");
    }
    const Circuit circ = detail::load_circuit(a.input);
    detail::require_simulable(circ.n);
    CompileResult r = compile_circuit(circ, {.optimize = !a.no_opt});
    if (a.skip_op) {
        if (*a.skip_op >= r.program.size()) {
            throw InvalidInput("--skip-op index " + std::to_string(*a.skip_op) +
                               " past end of program (" +
                               std::to_string(r.program.size()) + " ops)");
        }
        r.program.ops.erase(r.program.ops.begin() +
                            static_cast<std::ptrdiff_t>(*a.skip_op));
    }
    SplitMix64 rng(a.seed);
    double min_fidelity = 1.0;
    for (int t = 0; t < a.trials; ++t) {
        OamState input = random_state(circ.n, rng);
        OamState compiled = input;
        apply_program(compiled, r.program);
        oracle::run_circuit(input, circ);
        min_fidelity = std::min(min_fidelity, oracle::fidelity(input, compiled));
    }
    const bool pass = min_fidelity >= 1.0 - a.tolerance;
    if (a.json) {
        out << Json{{"min_fidelity", min_fidelity},
                    {"trials", a.trials},
                    {"tolerance", a.tolerance},
                    {"ops", r.program.size()},
                    {"pass", pass}}
                   .dump(2)
            << '\n';
    } else {
        out << "trials: " << a.trials << '\n'
            << "ops: " << r.program.size() << '\n'
            << "min_fidelity: " << detail::full(min_fidelity) << '\n'
            << "result: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? kOk : kVerifyFailed;
}

struct GenerateArgs {
    std::string kind;
    int n = 0;
    int depth = 10;
    std::uint64_t seed = 0;
    std::string gates = "full";
    std::string output;
};

inline int cmd_generate(const GenerateArgs &a, std::ostream &out, std::ostream &) {
    Circuit circ = [&] {
        if (a.kind == "qft") {
            return qft_circuit(a.n);
        }
        if (a.kind == "ghz") {
            return ghz_circuit(a.n);
        }
        if (a.kind == "random") {
            return random_circuit({a.n, a.depth, a.seed, gate_set_from_name(a.gates)});
        }
        throw InvalidInput("unknown generator '" + a.kind + "' (qft, ghz, random)");
    }();
    if (a.output.empty()) {
        write_circuit(out, circ);
    } else {
        detail::write_file(a.output, format_circuit(circ));
    }
    return kOk;
}

struct CostArgs {
    std::string input;
    std::string components;
    std::string scaling;
    int n_min = 4;
    int n_max = 16;
    bool no_opt = false;
    bool json = false;
};

inline int cmd_cost(const CostArgs &a, std::ostream &out, std::ostream &) {
    CostReport report;
    if (!a.scaling.empty()) {
        report = scaling_report(scaling_gate_from_name(a.scaling), a.n_min, a.n_max,
                                {.optimize = !a.no_opt});
    } else {
        if (a.input.empty()) {
            throw InvalidInput("cost needs an input file or --scaling");
        }
        const ComponentTable table = detail::load_components(a.components);
        const std::string text = detail::read_file(a.input);
        if (detail::sniff(text) == detail::FileKind::Circuit) {
            const Circuit circ = detail::load_circuit(a.input);
            report = cost_report(compile_circuit(circ, {.optimize = !a.no_opt}).program,
                                 table);
        } else {
            report = cost_report(detail::load_program(a.input), table);
        }
    }

    if (a.json) {
        out << to_json(report).dump(2) << '\n';
        return kOk;
    }
    detail::print_counts(out, report.totals);
    if (!report.bill_of_materials.empty()) {
        out << "components (default table values are estimates):\n";
        for (const auto &[name, count] : report.bill_of_materials) {
            out << "  " << name << ' ' << count << '\n';
        }
    }
    if (report.fit) {
        out << "gate: " << report.gate << '\n' << "n ops\n";
        for (const auto &s : report.samples) {
            out << s.n << ' ' << s.ops << '\n';
        }
        out << "exponent: " << detail::full(report.fit->exponent) << '\n'
            << "residual: " << detail::full(report.fit->residual) << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------

/// Parses argv and dispatches. Never throws.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Compile n-qubit circuits to single-photon OAM operations"};
    app.require_subcommand(1);

    CompileArgs compile;
    auto *c = app.add_subcommand("compile", "Lower a circuit file to an elementary program");
    c->add_option("circuit", compile.input, "Circuit file")->required();
    c->add_option("-o,--output", compile.output, "Write the program here");
    c->add_flag("--no-opt", compile.no_opt, "Disable the peephole optimizer");
    c->add_flag("--json", compile.json, "Structured output");

    SimulateArgs simulate;
    auto *s = app.add_subcommand("simulate", "Run an elementary program");
    s->add_option("program", simulate.input, "Program file (text or JSON)")->required();
    auto *mode_opt = s->add_option("--mode", simulate.mode, "Initial OAM mode");
    s->add_option("--state", simulate.state_file, "Initial state file ('re im' per line)")
        ->excludes(mode_opt);
    s->add_option("--threshold", simulate.threshold, "Smallest probability listed");
    s->add_flag("--json", simulate.json, "Structured output");

    VerifyArgs verify;
    std::size_t skip_op = 0;
    auto *v = app.add_subcommand("verify", "Compare compiled program against the reference simulator");
    v->add_option("circuit", verify.input, "Circuit file")->required();
    v->add_option("--trials", verify.trials, "Random input states");
    v->add_option("--tolerance", verify.tolerance, "Pass if min fidelity >= 1 - tolerance");
    v->add_option("--seed", verify.seed, "Seed for the input states");
    v->add_flag("--no-opt", verify.no_opt, "Disable the peephole optimizer");
    auto *skip = v->add_option("--skip-op", skip_op, "Drop this op index (negative control)");
    v->add_flag("--json", verify.json, "Structured output");

    GenerateArgs generate;
    auto *g = app.add_subcommand("generate", "Emit a built-in circuit");
    g->add_option("kind", generate.kind, "qft, ghz or random")->required();
    g->add_option("--n", generate.n, "Number of qubits")->required();
    g->add_option("--depth", generate.depth, "Gate count (random)");
    g->add_option("--seed", generate.seed, "Seed (random)");
    g->add_option("--gates", generate.gates, "clifford_t or full (random)");
    g->add_option("-o,--output", generate.output, "Write the circuit here");

    CostArgs cost;
    auto *k = app.add_subcommand("cost", "Op counts, component bill, scaling fits");
    k->add_option("input", cost.input, "Circuit or program file");
    k->add_option("--components", cost.components,
                  std::string("Component table file (else $") + kComponentsEnv + ")");
    k->add_option("--scaling", cost.scaling,
                  "h_middle, h_front, cnot_far, cz_far, cphase_far or qft");
    k->add_option("--n-min", cost.n_min, "Scaling range start");
    k->add_option("--n-max", cost.n_max, "Scaling range end");
    k->add_flag("--no-opt", cost.no_opt, "Disable the peephole optimizer");
    k->add_flag("--json", cost.json, "Structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (c->parsed()) {
            return cmd_compile(compile, out, err);
        }
        if (s->parsed()) {
            return cmd_simulate(simulate, out, err);
        }
        if (v->parsed()) {
            if (skip->count() > 0) {
                verify.skip_op = skip_op;
            }
            return cmd_verify(verify, out, err);
        }
        if (g->parsed()) {
            return cmd_generate(generate, out, err);
        }
        if (k->parsed()) {
            return cmd_cost(cost, out, err);
        }
    } catch (const InvalidInput &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InvalidOperation &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ResourceError &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kInternalError;
}

} // namespace oamq::cli
