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
 * Mode-level action of the four single-photon operations.
 *
 * Each function is written directly against the mode labels l = 0 .. d-1:
 *
 *   PHASE(theta):  |l> -> e^{+i theta}|l> (l even),  e^{-i theta}|l> (l odd)
 *   H:             |2m> -> (|2m> + |2m+1>)/sqrt2,  |2m+1> -> (|2m> - |2m+1>)/sqrt2
 *   CPERM:         |l> -> |2l>            for l <= d/2 - 1
 *                  |l> -> |2l - d + 1>    for l >  d/2 - 1
 *   CZ:            |4m> -> -|4m>,  |4m+j> -> |4m+j>  (j = 1, 2, 3)
 *
 * CPERM is a left rotation of the n mode bits, so as a qubit permutation it
 * sends qubit k to qubit k+1 and qubit n to qubit 1. It is applied only in
 * that direction; its inverse is CPERM^{n-1}.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "oamq/core.hpp"
#include "oamq/linalg.hpp"

namespace oamq {

inline void apply_phase(OamState &state, double theta) {
    const Complex even = std::polar(1.0, theta);
    const Complex odd = std::conj(even);
    auto amp = state.amplitudes();
    for (std::size_t l = 0; l < amp.size(); l += 2) {
        amp[l] *= even;
        amp[l + 1] *= odd;
    }
}

inline void apply_hadamard(OamState &state) {
    const double s = 1.0 / std::sqrt(2.0);
    auto amp = state.amplitudes();
    for (std::size_t m = 0; m < amp.size() / 2; ++m) {
        const Complex a = amp[2 * m];
        const Complex b = amp[2 * m + 1];
        amp[2 * m] = s * (a + b);
        amp[2 * m + 1] = s * (a - b);
    }
}

/// `scratch` is resized to d and reused; pass the same buffer across calls
/// to avoid reallocations.
inline void apply_cperm(OamState &state, std::vector<Complex> &scratch) {
    auto amp = state.amplitudes();
    const std::size_t d = amp.size();
    scratch.resize(d);
    for (std::size_t l = 0; l < d; ++l) {
        const std::size_t dest = l <= d / 2 - 1 ? 2 * l : 2 * l - d + 1;
        scratch[dest] = amp[l];
    }
    std::copy(scratch.begin(), scratch.end(), amp.begin());
}

inline void apply_cperm(OamState &state) {
    std::vector<Complex> scratch;
    apply_cperm(state, scratch);
}

inline void apply_cz(OamState &state) {
    if (state.qubits().value() < 2) {
        throw InvalidOperation("CZ requires at least 2 qubits");
    }
    auto amp = state.amplitudes();
    for (std::size_t l = 0; l < amp.size(); l += 4) {
        amp[l] = -amp[l];
    }
}

inline void apply_op(OamState &state, const ElementaryOp &op,
                     std::vector<Complex> &scratch) {
    switch (op.kind) {
    case OpKind::Phase:
        apply_phase(state, op.theta);
        break;
    case OpKind::Had:
        apply_hadamard(state);
        break;
    case OpKind::CPerm:
        apply_cperm(state, scratch);
        break;
    case OpKind::Cz4:
        apply_cz(state);
        break;
    }
}

inline void apply_op(OamState &state, const ElementaryOp &op) {
    std::vector<Complex> scratch;
    apply_op(state, op, scratch);
}

/// Applies prog.ops left to right.
inline void apply_program(OamState &state, const ElementaryProgram &prog) {
    if (!(state.qubits() == prog.n)) {
        throw InvalidInput("program is for n = " + std::to_string(prog.n.value()) +
                           " but state has n = " +
                           std::to_string(state.qubits().value()));
    }
    prog.validate();
    std::vector<Complex> scratch;
    for (const ElementaryOp &op : prog.ops) {
        apply_op(state, op, scratch);
    }
}

inline constexpr int kMaxDenseQubits = 10;

/// d x d matrix of a single op; column j is the op applied to |j>.
inline DenseMatrix elementary_unitary(const ElementaryOp &op, QubitCount n) {
    if (n.value() > kMaxDenseQubits) {
        throw ResourceError("elementary_unitary limited to n <= " +
                            std::to_string(kMaxDenseQubits));
    }
    const std::size_t d = n.dim();
    DenseMatrix m(d);
    std::vector<Complex> scratch;
    for (std::size_t j = 0; j < d; ++j) {
        OamState basis(n, j);
        apply_op(basis, op, scratch);
        for (std::size_t i = 0; i < d; ++i) {
            m(i, j) = basis[i];
        }
    }
    return m;
}

/// d x d matrix of a whole program (same column convention).
inline DenseMatrix program_unitary(const ElementaryProgram &prog) {
    if (prog.n.value() > kMaxDenseQubits) {
        throw ResourceError("program_unitary limited to n <= " +
                            std::to_string(kMaxDenseQubits));
    }
    const std::size_t d = prog.n.dim();
    DenseMatrix m(d);
    for (std::size_t j = 0; j < d; ++j) {
        OamState basis(prog.n, j);
        apply_program(basis, prog);
        for (std::size_t i = 0; i < d; ++i) {
            m(i, j) = basis[i];
        }
    }
    return m;
}

} // namespace oamq
