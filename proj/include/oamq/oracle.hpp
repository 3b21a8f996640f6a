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
 * Reference n-qubit simulator.
 *
 * Applies ordinary tensor-product gates to the amplitude vector, indexing
 * qubit k as bit k-1 of the mode label. Nothing here calls into
 * elementary.hpp: the two are deliberately separate code paths so that
 * comparing them means something.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <type_traits>
#include <string>
#include <variant>
#include <vector>

#include "oamq/core.hpp"
#include "oamq/linalg.hpp"

namespace oamq::oracle {

namespace detail {

inline void check_qubit(const OamState &state, int q) {
    if (q < 1 || q > state.qubits().value()) {
        throw InvalidInput("qubit index " + std::to_string(q) +
                           " out of range for n = " +
                           std::to_string(state.qubits().value()));
    }
}

} // namespace detail

/// u applied to qubit `target` (bit target-1).
inline void apply_1q(OamState &state, const Unitary2 &u, int target) {
    detail::check_qubit(state, target);
    const std::size_t stride = std::size_t{1} << (target - 1);
    auto amp = state.amplitudes();
    for (std::size_t base = 0; base < amp.size(); base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + stride;
            const Complex a0 = amp[i0];
            const Complex a1 = amp[i1];
            amp[i0] = u(0, 0) * a0 + u(0, 1) * a1;
            amp[i1] = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }
}

/// u applied to the qubit pair; u's local basis index is
/// b_low + 2 * b_high with b_low the bit of q_low. q_low need not be the
/// smaller label.
inline void apply_2q(OamState &state, const Unitary4 &u, int q_low, int q_high) {
    detail::check_qubit(state, q_low);
    detail::check_qubit(state, q_high);
    if (q_low == q_high) {
        throw InvalidInput("two-qubit gate needs distinct qubits");
    }
    const std::size_t bit_low = std::size_t{1} << (q_low - 1);
    const std::size_t bit_high = std::size_t{1} << (q_high - 1);
    const std::size_t both = bit_low | bit_high;
    auto amp = state.amplitudes();
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if ((i & both) != 0) {
            continue;
        }
        const std::array<std::size_t, 4> idx = {i, i | bit_low, i | bit_high,
                                                i | both};
        std::array<Complex, 4> in{};
        for (std::size_t k = 0; k < 4; ++k) {
            in[k] = amp[idx[k]];
        }
        for (std::size_t r = 0; r < 4; ++r) {
            Complex acc{0.0, 0.0};
            for (std::size_t c = 0; c < 4; ++c) {
                acc += u(r, c) * in[c];
            }
            amp[idx[r]] = acc;
        }
    }
}

/// Relabels qubits: the value held by qubit k moves to qubit dest[k-1]
/// (dest is 1-indexed and must be a permutation of 1..n).
inline void apply_qubit_permutation(OamState &state, const std::vector<int> &dest) {
    const int n = state.qubits().value();
    if (dest.size() != static_cast<std::size_t>(n)) {
        throw InvalidInput("permutation length mismatch");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int q : dest) {
        if (q < 1 || q > n || seen[static_cast<std::size_t>(q - 1)]) {
            throw InvalidInput("not a permutation of the qubit labels");
        }
        seen[static_cast<std::size_t>(q - 1)] = true;
    }
    auto amp = state.amplitudes();
    std::vector<Complex> out(amp.size());
    for (std::size_t m = 0; m < amp.size(); ++m) {
        std::size_t target = 0;
        for (int k = 0; k < n; ++k) {
            if ((m >> k) & 1U) {
                target |= std::size_t{1} << (dest[static_cast<std::size_t>(k)] - 1);
            }
        }
        out[target] = amp[m];
    }
    std::copy(out.begin(), out.end(), amp.begin());
}

/// Qubit k -> k+1, qubit n -> 1.
inline void apply_qubit_rotation(OamState &state) {
    const int n = state.qubits().value();
    std::vector<int> dest(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        dest[static_cast<std::size_t>(k - 1)] = k == n ? 1 : k + 1;
    }
    apply_qubit_permutation(state, dest);
}

inline void apply_gate(OamState &state, const Gate &gate) {
    std::visit(
        [&](const auto &g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, OneQubit>) {
                apply_1q(state, g.matrix, g.target);
            } else if constexpr (std::is_same_v<T, Cnot>) {
                apply_2q(state, matrices::cnot_low_controls(), g.control, g.target);
            } else if constexpr (std::is_same_v<T, CzStd>) {
                apply_2q(state, matrices::cz_std(), g.control, g.target);
            } else {
                apply_2q(state, matrices::cphase(g.theta), g.control, g.target);
            }
        },
        gate);
}

inline void run_circuit(OamState &state, const Circuit &circ) {
    if (!(state.qubits() == circ.n)) {
        throw InvalidInput("circuit is for n = " + std::to_string(circ.n.value()) +
                           " but state has n = " +
                           std::to_string(state.qubits().value()));
    }
    require_valid(circ);
    for (const Gate &g : circ.gates) {
        apply_gate(state, g);
    }
}

/// <a|b>
inline Complex inner_product(const OamState &a, const OamState &b) {
    if (a.dim() != b.dim()) {
        throw InvalidInput("fidelity: state dimension mismatch");
    }
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

/// |<a|b>|, insensitive to the global phase of either state.
inline double fidelity(const OamState &a, const OamState &b) {
    return std::abs(inner_product(a, b));
}

inline constexpr int kMaxDftQubits = 12;

/// amp'[j] = sum_k e^{2 pi i jk/d} amp[k] / sqrt(d), by direct summation.
inline void dft_apply(OamState &state) {
    if (state.qubits().value() > kMaxDftQubits) {
        throw ResourceError("dft_apply limited to n <= " +
                            std::to_string(kMaxDftQubits));
    }
    const std::size_t d = state.dim();
    std::vector<Complex> twiddle(d);
    for (std::size_t r = 0; r < d; ++r) {
        twiddle[r] = std::polar(1.0, 2.0 * kPi * static_cast<double>(r) /
                                         static_cast<double>(d));
    }
    auto amp = state.amplitudes();
    std::vector<Complex> out(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t j = 0; j < d; ++j) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < d; ++k) {
            acc += twiddle[(j * k) & (d - 1)] * amp[k];
        }
        out[j] = acc * scale;
    }
    std::copy(out.begin(), out.end(), amp.begin());
}

} // namespace oamq::oracle
