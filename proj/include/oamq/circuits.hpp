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
 * Built-in circuit generators: QFT, GHZ and seeded random circuits.
 */

#pragma once

#include <cstdint>
#include <utility>
#include <string>
#include <vector>

#include "oamq/core.hpp"
#include "oamq/random.hpp"

namespace oamq {

inline constexpr int kMaxGeneratorQubits = 16;

namespace detail {

inline void check_generator_size(int n, int min_n, const char *what) {
    if (n < min_n || n > kMaxGeneratorQubits) {
        throw InvalidInput(std::string(what) + " needs " + std::to_string(min_n) +
                           " <= n <= " + std::to_string(kMaxGeneratorQubits) +
                           ", got " + std::to_string(n));
    }
}

inline void append_swap(Circuit &c, int a, int b) {
    c.add(gates::cnot(a, b)).add(gates::cnot(b, a)).add(gates::cnot(a, b));
}

} // namespace detail

/// Quantum Fourier transform on mode labels: with qubit 1 as the least
/// significant bit, the circuit maps |j> to sum_k e^{2 pi i jk/d}|k>/sqrt(d)
/// exactly (no global phase). Qubit n is processed first; the trailing
/// swaps reverse the qubit order.
inline Circuit qft_circuit(int n) {
    detail::check_generator_size(n, 1, "qft");
    Circuit c{QubitCount(n)};
    for (int q = n; q >= 1; --q) {
        c.add(gates::h(q));
        for (int k = q - 1; k >= 1; --k) {
            c.add(gates::cphase(kPi / static_cast<double>(1 << (q - k)), k, q));
        }
    }
    for (int q = 1; q <= n / 2; ++q) {
        detail::append_swap(c, q, n + 1 - q);
    }
    return c;
}

/// H(1) then CNOT(k, k+1): |0...0> -> (|0> + |d-1>)/sqrt2.
inline Circuit ghz_circuit(int n) {
    detail::check_generator_size(n, 2, "ghz");
    Circuit c{QubitCount(n)};
    c.add(gates::h(1));
    for (int k = 1; k < n; ++k) {
        c.add(gates::cnot(k, k + 1));
    }
    return c;
}

enum class GateSet {
    /// h x y z s t cnot cz
    CliffordT,
    /// h x y z s t rx ry rz u cnot cz cphase
    Full,
};

inline const char *gate_set_name(GateSet set) {
    return set == GateSet::CliffordT ? "clifford_t" : "full";
}

inline GateSet gate_set_from_name(const std::string &name) {
    if (name == "clifford_t") {
        return GateSet::CliffordT;
    }
    if (name == "full") {
        return GateSet::Full;
    }
    throw InvalidInput("unknown gate set '" + name + "' (expected clifford_t or full)");
}

struct RandomSpec {
    int n = 1;
    int depth = 0;
    std::uint64_t seed = 0;
    GateSet gate_set = GateSet::Full;
};

/// Deterministic in `spec`. Per gate, using one SplitMix64 stream seeded
/// with spec.seed:
///   kind  = below(#kinds)   over the set's kinds in the order listed on
///           GateSet (2-qubit kinds omitted when n = 1)
///   1q:    [angle()] for rx/ry/rz, random_unitary2 for u; then
///          target = 1 + below(n)
///   2q:    [angle()] for cphase; control = 1 + below(n),
///          t = 1 + below(n-1), target = t + (t >= control)
inline Circuit random_circuit(const RandomSpec &spec) {
    detail::check_generator_size(spec.n, 1, "random");
    if (spec.depth < 0) {
        throw InvalidInput("random circuit depth must be non-negative");
    }
    static const std::vector<std::string> clifford_t = {"h", "x",    "y", "z",
                                                         "s", "t",    "cnot", "cz"};
    static const std::vector<std::string> full = {"h",  "x",  "y",  "z",    "s",
                                                   "t",  "rx", "ry", "rz",   "u",
                                                   "cnot", "cz", "cphase"};
    std::vector<std::string> kinds;
    for (const std::string &k : spec.gate_set == GateSet::CliffordT ? clifford_t : full) {
        const bool two_qubit = k == "cnot" || k == "cz" || k == "cphase";
        if (!two_qubit || spec.n >= 2) {
            kinds.push_back(k);
        }
    }

    SplitMix64 rng(spec.seed);
    const auto n64 = static_cast<std::uint64_t>(spec.n);
    auto qubit = [&]() { return 1 + static_cast<int>(rng.below(n64)); };
    auto pair = [&]() {
        const int control = qubit();
        int target = 1 + static_cast<int>(rng.below(n64 - 1));
        if (target >= control) {
            ++target;
        }
        return std::pair{control, target};
    };

    Circuit c{QubitCount(spec.n)};
    for (int i = 0; i < spec.depth; ++i) {
        const std::string &k = kinds[rng.below(kinds.size())];
        if (k == "h") {
            c.add(gates::h(qubit()));
        } else if (k == "x") {
            c.add(gates::x(qubit()));
        } else if (k == "y") {
            c.add(gates::y(qubit()));
        } else if (k == "z") {
            c.add(gates::z(qubit()));
        } else if (k == "s") {
            c.add(gates::s(qubit()));
        } else if (k == "t") {
            c.add(gates::t(qubit()));
        } else if (k == "rx" || k == "ry" || k == "rz") {
            const double phi = rng.angle();
            const int q = qubit();
            c.add(k == "rx" ? gates::rx(phi, q)
                            : k == "ry" ? gates::ry(phi, q) : gates::rz(phi, q));
        } else if (k == "u") {
            const Unitary2 m = random_unitary2(rng);
            c.add(gates::u(m, qubit()));
        } else if (k == "cnot") {
            const auto [a, b] = pair();
            c.add(gates::cnot(a, b));
        } else if (k == "cz") {
            const auto [a, b] = pair();
            c.add(gates::cz(a, b));
        } else {
            const double theta = rng.angle();
            const auto [a, b] = pair();
            c.add(gates::cphase(theta, a, b));
        }
    }
    return c;
}

} // namespace oamq
