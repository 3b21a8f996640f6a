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
 * Line-oriented text formats.
 *
 * Circuit files:
 *
 *     # comment
 *     qubits 3
 *     h 1
 *     rz 0.25 2
 *     cnot 1 3
 *     cphase 1.5707963267948966 2 3
 *     u 1 0.7071,0 0.7071,0 0.7071,0 -0.7071,0
 *
 * Gate lines: `h|x|y|z|s|t <q>`, `rx|ry|rz <theta> <q>`, `cnot <c> <t>`,
 * `cz <c> <t>`, `cphase <theta> <c> <t>`, and `u <q>` followed by the four
 * row-major matrix entries as `re,im`. Angles are radians.
 *
 * Program files:
 *
 *     n 3
 *     PHASE 0.5
 *     H
 *     CPERM
 *     CZ
 *
 * Both formats accept `#` comments and blank lines. Numbers are written
 * with 17 significant digits so files round-trip exactly.
 */

#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "oamq/core.hpp"

namespace oamq {

/// Input that could not be parsed; `line()` is 1-based (0 when unknown).
class ParseError : public InvalidInput {
  public:
    ParseError(std::size_t line, const std::string &message)
        : InvalidInput("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

namespace io_detail {

inline std::vector<std::string> tokenize(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
    }
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) {
        tokens.push_back(tok);
    }
    return tokens;
}

inline double parse_double(const std::string &tok, std::size_t line) {
    double value = 0.0;
    const char *first = tok.data();
    const char *last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw ParseError(line, "expected a finite number, got '" + tok + "'");
    }
    return value;
}

inline long long parse_int(const std::string &tok, std::size_t line) {
    long long value = 0;
    const char *first = tok.data();
    const char *last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    return value;
}

inline Complex parse_complex(const std::string &tok, std::size_t line) {
    const auto comma = tok.find(',');
    if (comma == std::string::npos) {
        throw ParseError(line, "expected 're,im', got '" + tok + "'");
    }
    return {parse_double(tok.substr(0, comma), line),
            parse_double(tok.substr(comma + 1), line)};
}

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void expect_arity(const std::vector<std::string> &tokens, std::size_t count,
                         std::size_t line, const char *usage) {
    if (tokens.size() != count) {
        throw ParseError(line, "'" + tokens[0] + "' expects: " + usage);
    }
}

inline int parse_qubit(const std::string &tok, std::size_t line) {
    const long long q = parse_int(tok, line);
    if (q < -1000000 || q > 1000000) {
        throw ParseError(line, "qubit index '" + tok + "' out of range");
    }
    return static_cast<int>(q);
}

} // namespace io_detail

struct ParsedCircuit {
    Circuit circuit;
    /// Source line of each gate, parallel to circuit.gates.
    std::vector<std::size_t> gate_lines;
};

/// Parses the circuit format. Syntax errors throw ParseError; qubit indices
/// are not range-checked here (use validate_circuit and gate_lines).
inline ParsedCircuit parse_circuit(std::istream &in) {
    using namespace io_detail;
    std::string raw;
    std::size_t line = 0;
    std::optional<ParsedCircuit> out;

    while (std::getline(in, raw)) {
        ++line;
        const auto tok = tokenize(raw);
        if (tok.empty()) {
            continue;
        }
        const std::string &op = tok[0];
        if (!out) {
            if (op != "qubits") {
                throw ParseError(line, "expected 'qubits <n>' header before gates");
            }
            expect_arity(tok, 2, line, "qubits <n>");
            const long long n = parse_int(tok[1], line);
            try {
                out.emplace(ParsedCircuit{Circuit{QubitCount(static_cast<int>(
                                              n < 0 || n > 1000 ? 0 : n))},
                                          {}});
            } catch (const InvalidInput &e) {
                throw ParseError(line, e.what());
            }
            continue;
        }
        if (op == "qubits") {
            throw ParseError(line, "duplicate 'qubits' header");
        }

        Gate g;
        if (op == "h" || op == "x" || op == "y" || op == "z" || op == "s" ||
            op == "t") {
            expect_arity(tok, 2, line, "<gate> <q>");
            const int q = parse_qubit(tok[1], line);
            g = op == "h"   ? gates::h(q)
                : op == "x" ? gates::x(q)
                : op == "y" ? gates::y(q)
                : op == "z" ? gates::z(q)
                : op == "s" ? gates::s(q)
                            : gates::t(q);
        } else if (op == "rx" || op == "ry" || op == "rz") {
            expect_arity(tok, 3, line, "<gate> <theta> <q>");
            const double phi = parse_double(tok[1], line);
            const int q = parse_qubit(tok[2], line);
            g = op == "rx" ? gates::rx(phi, q)
                : op == "ry" ? gates::ry(phi, q)
                             : gates::rz(phi, q);
        } else if (op == "cnot" || op == "cz") {
            expect_arity(tok, 3, line, "<gate> <control> <target>");
            const int c = parse_qubit(tok[1], line);
            const int t = parse_qubit(tok[2], line);
            g = op == "cnot" ? gates::cnot(c, t) : gates::cz(c, t);
        } else if (op == "cphase") {
            expect_arity(tok, 4, line, "cphase <theta> <control> <target>");
            g = gates::cphase(parse_double(tok[1], line), parse_qubit(tok[2], line),
                              parse_qubit(tok[3], line));
        } else if (op == "u") {
            expect_arity(tok, 6, line, "u <q> <re,im> <re,im> <re,im> <re,im>");
            const int q = parse_qubit(tok[1], line);
            Unitary2 m{parse_complex(tok[2], line), parse_complex(tok[3], line),
                       parse_complex(tok[4], line), parse_complex(tok[5], line)};
            g = gates::u(m, q);
        } else {
            throw ParseError(line, "unknown gate '" + op + "'");
        }
        out->circuit.add(std::move(g));
        out->gate_lines.push_back(line);
    }
    if (!out) {
        throw ParseError(line, "missing 'qubits <n>' header");
    }
    return std::move(*out);
}

inline ParsedCircuit parse_circuit(const std::string &text) {
    std::istringstream in(text);
    return parse_circuit(in);
}

inline void write_circuit(std::ostream &out, const Circuit &circ) {
    using io_detail::format_double;
    out << "qubits " << circ.n.value() << '\n';
    for (const Gate &gate : circ.gates) {
        std::visit(
            [&](const auto &g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, OneQubit>) {
                    if (g.name == "rx" || g.name == "ry" || g.name == "rz") {
                        out << g.name << ' ' << format_double(g.angle) << ' '
                            << g.target << '\n';
                    } else if (g.name == "u") {
                        out << "u " << g.target;
                        for (const Complex &v : g.matrix.data()) {
                            out << ' ' << format_double(v.real()) << ','
                                << format_double(v.imag());
                        }
                        out << '\n';
                    } else {
                        out << g.name << ' ' << g.target << '\n';
                    }
                } else if constexpr (std::is_same_v<T, Cnot>) {
                    out << "cnot " << g.control << ' ' << g.target << '\n';
                } else if constexpr (std::is_same_v<T, CzStd>) {
                    out << "cz " << g.control << ' ' << g.target << '\n';
                } else {
                    out << "cphase " << format_double(g.theta) << ' ' << g.control
                        << ' ' << g.target << '\n';
                }
            },
            gate);
    }
}

inline std::string format_circuit(const Circuit &circ) {
    std::ostringstream out;
    write_circuit(out, circ);
    return out.str();
}

inline ElementaryProgram parse_program(std::istream &in) {
    using namespace io_detail;
    std::string raw;
    std::size_t line = 0;
    std::optional<ElementaryProgram> prog;
    while (std::getline(in, raw)) {
        ++line;
        const auto tok = tokenize(raw);
        if (tok.empty()) {
            continue;
        }
        if (!prog) {
            if (tok[0] != "n") {
                throw ParseError(line, "expected 'n <int>' header before ops");
            }
            expect_arity(tok, 2, line, "n <int>");
            const long long n = parse_int(tok[1], line);
            try {
                prog.emplace(QubitCount(static_cast<int>(n < 0 || n > 1000 ? 0 : n)));
            } catch (const InvalidInput &e) {
                throw ParseError(line, e.what());
            }
            continue;
        }
        OpKind kind;
        try {
            kind = op_kind_from_name(tok[0]);
        } catch (const InvalidInput &e) {
            throw ParseError(line, e.what());
        }
        if (kind == OpKind::Phase) {
            expect_arity(tok, 2, line, "PHASE <theta>");
            prog->push(ElementaryOp::phase(parse_double(tok[1], line)));
        } else {
            expect_arity(tok, 1, line, "no arguments");
            if (kind == OpKind::Cz4 && prog->n.value() < 2) {
                throw ParseError(line, "CZ requires at least 2 qubits");
            }
            prog->push(ElementaryOp{kind, 0.0});
        }
    }
    if (!prog) {
        throw ParseError(line, "missing 'n <int>' header");
    }
    return std::move(*prog);
}

inline ElementaryProgram parse_program(const std::string &text) {
    std::istringstream in(text);
    return parse_program(in);
}

inline void write_program(std::ostream &out, const ElementaryProgram &prog) {
    out << "n " << prog.n.value() << '\n';
    for (const ElementaryOp &op : prog.ops) {
        out << op_kind_name(op.kind);
        if (op.kind == OpKind::Phase) {
            out << ' ' << io_detail::format_double(op.theta);
        }
        out << '\n';
    }
}

inline std::string format_program(const ElementaryProgram &prog) {
    std::ostringstream out;
    write_program(out, prog);
    return out.str();
}

/// State files: one `re im` pair per line, d lines, mode order.
inline OamState parse_state(std::istream &in, QubitCount n) {
    using namespace io_detail;
    std::vector<Complex> amp;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto tok = tokenize(raw);
        if (tok.empty()) {
            continue;
        }
        if (tok.size() != 2) {
            throw ParseError(line, "expected '<re> <im>'");
        }
        amp.emplace_back(parse_double(tok[0], line), parse_double(tok[1], line));
    }
    if (amp.size() != n.dim()) {
        throw InvalidInput("state file has " + std::to_string(amp.size()) +
                           " amplitudes, expected " + std::to_string(n.dim()));
    }
    return OamState(n, std::move(amp));
}

} // namespace oamq
