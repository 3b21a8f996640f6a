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
 * Brute-force checks of synthesized two-qubit fragments.
 */

#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <optional>
#include <string>

#include "oamq/compiler.hpp"
#include "oamq/elementary.hpp"

namespace oamq {

/// 4x4 matrix of a fragment built for n = 2 (local index b1 + 2 b2).
inline Unitary4 fragment_matrix_n2(const ElementaryProgram &prog) {
    if (prog.n.value() != 2) {
        throw InvalidInput("fragment_matrix_n2 needs a 2-qubit program");
    }
    const DenseMatrix m = program_unitary(prog);
    Unitary4 out;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

struct SwapRecipeReport {
    /// The recipe's 4x4 matrix.
    Unitary4 matrix;
    /// SWAP^dagger * matrix, i.e. the correction applied before SWAP.
    Unitary4 residual;
    /// Distance of `matrix` from SWAP modulo global phase.
    double distance_from_swap = 0.0;
    /// Pauli labels (qubit 1, qubit 2) with residual ~ P_2 (x) P_1, if any.
    std::optional<std::array<char, 2>> pauli_correction;
};

namespace detail {

inline double distance_up_to_phase(const Unitary4 &a, const Unitary4 &b) {
    return DenseMatrix::from(a).max_abs_diff_up_to_phase(DenseMatrix::from(b));
}

} // namespace detail

/// Evaluates literal_swap_first2 on n = 2 and identifies the local Pauli
/// correction (I (x) I when none is needed) separating it from SWAP.
inline SwapRecipeReport swap_recipe_residual() {
    SwapRecipeReport r;
    r.matrix = fragment_matrix_n2(literal_swap_first2(QubitCount(2)).program);
    r.residual = matrices::swap().adjoint() * r.matrix;
    r.distance_from_swap = detail::distance_up_to_phase(r.matrix, matrices::swap());

    const std::array<std::pair<char, Unitary2>, 4> paulis = {
        std::pair{'I', matrices::identity()}, std::pair{'X', matrices::pauli_x()},
        std::pair{'Y', matrices::pauli_y()}, std::pair{'Z', matrices::pauli_z()}};
    for (const auto &[label1, p1] : paulis) {
        for (const auto &[label2, p2] : paulis) {
            if (detail::distance_up_to_phase(r.residual, kron(p2, p1)) < 1e-10) {
                r.pauli_correction = std::array<char, 2>{label1, label2};
            }
        }
    }
    return r;
}

} // namespace oamq
