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
 * Op counting, optical bill of materials, and scaling fits.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oamq/circuits.hpp"
#include "oamq/compiler.hpp"
#include "oamq/core.hpp"

namespace oamq {

inline const std::vector<std::string> &component_names() {
    static const std::vector<std::string> names = {
        "phase_plate", "oam_bs",           "bs",
        "dove_prism",  "mode_sorter",      "mode_sorter_reversed",
        "double_transformation"};
    return names;
}

using BillOfMaterials = std::map<std::string, std::size_t>;

/// Optical components needed per elementary op.
class ComponentTable {
  public:
    void set(OpKind kind, const std::string &component, std::size_t count) {
        rows_[kind][component] = count;
    }

    [[nodiscard]] bool has(OpKind kind) const { return rows_.count(kind) != 0; }

    [[nodiscard]] const BillOfMaterials &row(OpKind kind) const {
        auto it = rows_.find(kind);
        if (it == rows_.end()) {
            throw InvalidInput(std::string("component table has no entry for ") +
                               op_kind_name(kind));
        }
        return it->second;
    }

    [[nodiscard]] const std::map<OpKind, BillOfMaterials> &rows() const {
        return rows_;
    }

  private:
    std::map<OpKind, BillOfMaterials> rows_;
};

/// Shipped defaults. These are rough schematic estimates (one interferometer
/// per op), not measured or published component counts; override them with
/// a table file for anything quantitative.
inline ComponentTable default_component_table() {
    ComponentTable t;
    // parity sorter in, phase plate on each arm, parity sorter out
    t.set(OpKind::Phase, "oam_bs", 2);
    t.set(OpKind::Phase, "phase_plate", 2);
    // parity sorters around an OAM-independent beam splitter
    t.set(OpKind::Had, "oam_bs", 2);
    t.set(OpKind::Had, "bs", 1);
    // doubling, sorting into paths, recombining
    t.set(OpKind::CPerm, "double_transformation", 1);
    t.set(OpKind::CPerm, "mode_sorter", 1);
    t.set(OpKind::CPerm, "mode_sorter_reversed", 1);
    // Mach-Zehnder with dove prisms
    t.set(OpKind::Cz4, "bs", 2);
    t.set(OpKind::Cz4, "dove_prism", 2);
    return t;
}

/// One `op_kind component count` triple per line; `#` starts a comment.
/// Op kinds use the program-format names (PHASE, H, CPERM, CZ).
inline ComponentTable parse_component_table(std::istream &in) {
    ComponentTable t;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string kind;
        std::string component;
        long long count = 0;
        if (!(fields >> kind)) {
            continue;
        }
        std::string extra;
        if (!(fields >> component >> count) || (fields >> extra) || count < 0) {
            throw InvalidInput("component table line " + std::to_string(line_no) +
                               ": expected '<op_kind> <component> <count>'");
        }
        OpKind k;
        try {
            k = op_kind_from_name(kind);
        } catch (const InvalidInput &e) {
            throw InvalidInput("component table line " + std::to_string(line_no) +
                               ": " + e.what());
        }
        t.set(k, component, static_cast<std::size_t>(count));
    }
    return t;
}

inline std::string format_component_table(const ComponentTable &t) {
    std::ostringstream out;
    for (const auto &[kind, row] : t.rows()) {
        for (const auto &[component, count] : row) {
            out << op_kind_name(kind) << ' ' << component << ' ' << count << '\n';
        }
    }
    return out.str();
}

/// Sum of the table rows of every op in the program.
inline BillOfMaterials optical_bill_of_materials(const ElementaryProgram &prog,
                                                 const ComponentTable &table) {
    const OpCounts counts = count_ops(prog);
    BillOfMaterials bom;
    for (OpKind kind : kAllOpKinds) {
        if (counts[kind] == 0) {
            continue;
        }
        for (const auto &[component, per_op] : table.row(kind)) {
            bom[component] += per_op * counts[kind];
        }
    }
    // zero-count components are not listed
    std::erase_if(bom, [](const auto &entry) { return entry.second == 0; });
    return bom;
}

// ---------------------------------------------------------------------------
// Scaling
// ---------------------------------------------------------------------------

/// Representative gates for scaling measurements.
enum class ScalingGate {
    OneQubitMiddle, ///< H on qubit ceil(n/2)
    OneQubitFront,  ///< H on qubit 1
    CnotFar,        ///< CNOT(1, n)
    CzFar,          ///< CZ(1, n)
    CPhaseFar,      ///< CPhase(pi/3, 1, n)
    Qft,            ///< full QFT circuit
};

inline const char *scaling_gate_name(ScalingGate g) {
    switch (g) {
    case ScalingGate::OneQubitMiddle:
        return "h_middle";
    case ScalingGate::OneQubitFront:
        return "h_front";
    case ScalingGate::CnotFar:
        return "cnot_far";
    case ScalingGate::CzFar:
        return "cz_far";
    case ScalingGate::CPhaseFar:
        return "cphase_far";
    case ScalingGate::Qft:
        return "qft";
    }
    return "?";
}

inline ScalingGate scaling_gate_from_name(const std::string &name) {
    for (ScalingGate g : {ScalingGate::OneQubitMiddle, ScalingGate::OneQubitFront,
                          ScalingGate::CnotFar, ScalingGate::CzFar,
                          ScalingGate::CPhaseFar, ScalingGate::Qft}) {
        if (name == scaling_gate_name(g)) {
            return g;
        }
    }
    throw InvalidInput("unknown scaling gate '" + name +
                       "' (h_middle, h_front, cnot_far, cz_far, cphase_far, qft)");
}

inline Circuit scaling_circuit(ScalingGate g, int n) {
    Circuit c{QubitCount(n)};
    switch (g) {
    case ScalingGate::OneQubitMiddle:
        c.add(gates::h((n + 1) / 2));
        break;
    case ScalingGate::OneQubitFront:
        c.add(gates::h(1));
        break;
    case ScalingGate::CnotFar:
        c.add(gates::cnot(1, n));
        break;
    case ScalingGate::CzFar:
        c.add(gates::cz(1, n));
        break;
    case ScalingGate::CPhaseFar:
        c.add(gates::cphase(kPi / 3.0, 1, n));
        break;
    case ScalingGate::Qft:
        return qft_circuit(n);
    }
    return c;
}

struct ScalingSample {
    int n = 0;
    std::size_t ops = 0;
};

/// log(ops) = exponent * log(n) + intercept, least squares. `residual` is
/// the RMS of the log-space residuals.
struct ScalingFit {
    double exponent = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
};

inline ScalingFit fit_power_law(const std::vector<ScalingSample> &samples) {
    if (samples.size() < 4) {
        throw InvalidInput("scaling fit needs at least 4 points, got " +
                           std::to_string(samples.size()));
    }
    const auto count = static_cast<double>(samples.size());
    double sx = 0.0;
    double sy = 0.0;
    for (const auto &s : samples) {
        if (s.ops == 0) {
            throw InvalidInput("scaling fit: zero op count at n = " +
                               std::to_string(s.n));
        }
        sx += std::log(static_cast<double>(s.n));
        sy += std::log(static_cast<double>(s.ops));
    }
    const double mx = sx / count;
    const double my = sy / count;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto &s : samples) {
        const double dx = std::log(static_cast<double>(s.n)) - mx;
        const double dy = std::log(static_cast<double>(s.ops)) - my;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    ScalingFit fit;
    fit.exponent = sxx > 0.0 ? sxy / sxx : 0.0;
    fit.intercept = my - fit.exponent * mx;
    double ss = 0.0;
    for (const auto &s : samples) {
        const double pred = fit.exponent * std::log(static_cast<double>(s.n)) +
                            fit.intercept;
        const double r = std::log(static_cast<double>(s.ops)) - pred;
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / count);
    return fit;
}

struct CostReport {
    OpCounts totals;
    BillOfMaterials bill_of_materials;
    std::string gate;
    std::vector<ScalingSample> samples;
    std::optional<ScalingFit> fit;
};

inline CostReport cost_report(const ElementaryProgram &prog,
                              const ComponentTable &table) {
    CostReport r;
    r.totals = count_ops(prog);
    r.bill_of_materials = optical_bill_of_materials(prog, table);
    return r;
}

/// Compiles the representative gate for each n in [n_min, n_max] and fits
/// the op count against n on log-log axes.
inline CostReport scaling_report(ScalingGate gate, int n_min, int n_max,
                                 const CompileOptions &options = {}) {
    if (n_min < 1 || n_max > kMaxGeneratorQubits || n_min > n_max) {
        throw InvalidInput("scaling range must satisfy 1 <= n_min <= n_max <= " +
                           std::to_string(kMaxGeneratorQubits));
    }
    const bool two_qubit = gate == ScalingGate::CnotFar ||
                           gate == ScalingGate::CzFar ||
                           gate == ScalingGate::CPhaseFar;
    if (two_qubit && n_min < 2) {
        throw InvalidInput("two-qubit scaling needs n_min >= 2");
    }
    CostReport r;
    r.gate = scaling_gate_name(gate);
    for (int n = n_min; n <= n_max; ++n) {
        const CompileResult compiled = compile_circuit(scaling_circuit(gate, n), options);
        r.samples.push_back({n, compiled.program.size()});
        if (n == n_max) {
            r.totals = compiled.stats.totals;
        }
    }
    r.fit = fit_power_law(r.samples);
    return r;
}

} // namespace oamq
