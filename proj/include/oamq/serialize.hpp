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
 * JSON encodings (nlohmann/json) of programs, compile stats, cost reports
 * and states.
 *
 *     program  {"n": 2, "ops": [{"kind": "PHASE", "theta": 0.5}, {"kind": "H"}]}
 *     stats    {"totals": {"PHASE": 1, "H": 1, "CPERM": 0, "CZ": 0},
 *               "per_gate_costs": [...], "per_gate_phases": [...],
 *               "global_phase": 0.0}
 */

#pragma once

#include <string>

#include "json.hpp"
#include "oamq/compiler.hpp"
#include "oamq/core.hpp"
#include "oamq/costmodel.hpp"

namespace oamq {

using Json = nlohmann::json;

inline Json to_json(const ElementaryProgram &prog) {
    Json ops = Json::array();
    for (const ElementaryOp &op : prog.ops) {
        Json o = {{"kind", op_kind_name(op.kind)}};
        if (op.kind == OpKind::Phase) {
            o["theta"] = op.theta;
        }
        ops.push_back(std::move(o));
    }
    return {{"n", prog.n.value()}, {"ops", std::move(ops)}};
}

inline ElementaryProgram program_from_json(const Json &j) {
    try {
        ElementaryProgram prog{QubitCount(j.at("n").get<int>())};
        for (const Json &o : j.at("ops")) {
            const OpKind kind = op_kind_from_name(o.at("kind").get<std::string>());
            if (kind == OpKind::Phase) {
                prog.push(ElementaryOp::phase(o.at("theta").get<double>()));
            } else {
                prog.push(ElementaryOp{kind, 0.0});
            }
        }
        prog.validate();
        return prog;
    } catch (const Json::exception &e) {
        throw InvalidInput(std::string("malformed program JSON: ") + e.what());
    } catch (const InvalidOperation &e) {
        throw InvalidInput(e.what());
    }
}

inline Json to_json(const OpCounts &counts) {
    Json j = Json::object();
    for (OpKind k : kAllOpKinds) {
        j[op_kind_name(k)] = counts[k];
    }
    return j;
}

inline Json to_json(const CompileStats &stats) {
    return {{"totals", to_json(stats.totals)},
            {"per_gate_costs", stats.per_gate_costs},
            {"per_gate_phases", stats.per_gate_phases},
            {"global_phase", stats.global_phase}};
}

inline Json to_json(const CostReport &report) {
    Json j = {{"totals", to_json(report.totals)},
              {"total_ops", report.totals.total()},
              {"bill_of_materials", report.bill_of_materials}};
    if (!report.gate.empty()) {
        j["gate"] = report.gate;
    }
    if (!report.samples.empty()) {
        Json samples = Json::array();
        for (const auto &s : report.samples) {
            samples.push_back({{"n", s.n}, {"ops", s.ops}});
        }
        j["samples"] = std::move(samples);
    }
    if (report.fit) {
        j["fit"] = {{"exponent", report.fit->exponent},
                    {"intercept", report.fit->intercept},
                    {"residual", report.fit->residual}};
    }
    return j;
}

/// {"n": .., "amplitudes": [[re, im], ...]}
inline Json to_json(const OamState &state) {
    Json amps = Json::array();
    for (const Complex &a : state.amplitudes()) {
        amps.push_back({a.real(), a.imag()});
    }
    return {{"n", state.qubits().value()}, {"amplitudes", std::move(amps)}};
}

} // namespace oamq
