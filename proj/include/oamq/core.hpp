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
 * Encoding conventions, circuit IR, elementary programs and the OAM state.
 *
 * Binary identification: an n-qubit basis state |c_1 c_2 ... c_n> is carried
 * by the OAM mode
 *
 *     m = sum_{k=1}^{n} c_k 2^{k-1}
 *
 * i.e. qubit 1 is the least-significant bit of the mode index. The
 * identification is sometimes written with the bit subscript c_{n-k}, which
 * would reference an undefined c_0 at k = n. LSB-first is the only reading
 * under which the phase, Hadamard and control-Z mode actions (all of which
 * touch the low-order mode bits) act on qubit 1 / qubits 1 and 2, so it is
 * the convention used everywhere in this library.
 *
 * Qubit labels are 1-indexed; mode indices are 0-indexed.
 */

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "oamq/linalg.hpp"

namespace oamq {

/// Malformed or out-of-range input (bad index, length mismatch, ...).
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Operation not defined for the given register (e.g. CZ4 with n < 2).
class InvalidOperation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Request exceeds a size guard (dense matrices, DFT, ...).
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Number of qubits n, and the number of OAM modes d = 2^n.
class QubitCount {
  public:
    static constexpr int kMax = 30;

    explicit QubitCount(int n) : n_(n) {
        if (n < 1 || n > kMax) {
            throw InvalidInput("qubit count must be in [1, " +
                               std::to_string(kMax) + "], got " +
                               std::to_string(n));
        }
    }

    [[nodiscard]] int value() const { return n_; }
    [[nodiscard]] std::size_t dim() const { return std::size_t{1} << n_; }

    friend bool operator==(QubitCount, QubitCount) = default;

  private:
    int n_;
};

using ModeIndex = std::uint64_t;
/// c_1 ... c_n, qubit-1-first. Entries must be 0 or 1.
using BitString = std::vector<std::uint8_t>;

inline ModeIndex mode_of_bits(const BitString &bits, QubitCount n) {
    if (bits.size() != static_cast<std::size_t>(n.value())) {
        throw InvalidInput("bit string has length " +
                           std::to_string(bits.size()) + ", expected " +
                           std::to_string(n.value()));
    }
    ModeIndex m = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] > 1) {
            throw InvalidInput("bit values must be 0 or 1");
        }
        m |= ModeIndex{bits[k]} << k;
    }
    return m;
}

inline BitString bits_of_mode(ModeIndex m, QubitCount n) {
    if (m >= n.dim()) {
        throw InvalidInput("mode " + std::to_string(m) +
                           " out of range for n = " + std::to_string(n.value()));
    }
    BitString bits(static_cast<std::size_t>(n.value()));
    for (std::size_t k = 0; k < bits.size(); ++k) {
        bits[k] = static_cast<std::uint8_t>((m >> k) & 1U);
    }
    return bits;
}

/// Dense amplitude vector over the d OAM modes of one photon.
class OamState {
  public:
    /// |mode>
    OamState(QubitCount n, ModeIndex mode = 0) : n_(n), amp_(n.dim()) {
        if (mode >= n.dim()) {
            throw InvalidInput("initial mode out of range");
        }
        amp_[mode] = 1.0;
    }

    OamState(QubitCount n, std::vector<Complex> amplitudes)
        : n_(n), amp_(std::move(amplitudes)) {
        if (amp_.size() != n.dim()) {
            throw InvalidInput("amplitude vector has " +
                               std::to_string(amp_.size()) + " entries, expected " +
                               std::to_string(n.dim()));
        }
    }

    [[nodiscard]] QubitCount qubits() const { return n_; }
    [[nodiscard]] std::size_t dim() const { return amp_.size(); }

    Complex &operator[](ModeIndex m) { return amp_[m]; }
    const Complex &operator[](ModeIndex m) const { return amp_[m]; }

    [[nodiscard]] std::span<Complex> amplitudes() { return amp_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const { return amp_; }

    [[nodiscard]] double norm_squared() const {
        double total = 0.0;
        for (const Complex &a : amp_) {
            total += std::norm(a);
        }
        return total;
    }

    void normalize() {
        const double norm = std::sqrt(norm_squared());
        if (norm == 0.0) {
            throw InvalidInput("cannot normalize the zero vector");
        }
        for (Complex &a : amp_) {
            a /= norm;
        }
    }

    /// max_m |a[m] - b[m]|
    [[nodiscard]] double max_abs_diff(const OamState &other) const {
        if (other.dim() != dim()) {
            throw InvalidInput("state dimension mismatch");
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < amp_.size(); ++i) {
            worst = std::max(worst, std::abs(amp_[i] - other.amp_[i]));
        }
        return worst;
    }

  private:
    QubitCount n_;
    std::vector<Complex> amp_;
};

// ---------------------------------------------------------------------------
// Standard gate matrices
// ---------------------------------------------------------------------------

namespace matrices {

inline Unitary2 identity() { return Unitary2::identity(); }
inline Unitary2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
inline Unitary2 pauli_y() {
    return {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0};
}
inline Unitary2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
inline Unitary2 hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, s, s, -s};
}
inline Unitary2 s_gate() { return {1.0, 0.0, 0.0, Complex{0.0, 1.0}}; }
inline Unitary2 t_gate() {
    return {1.0, 0.0, 0.0, std::polar(1.0, kPi / 4.0)};
}
/// RX(phi) = exp(-i phi X / 2)
inline Unitary2 rx(double phi) {
    const double c = std::cos(phi / 2.0);
    const double s = std::sin(phi / 2.0);
    return {c, Complex{0.0, -s}, Complex{0.0, -s}, c};
}
/// RY(phi) = exp(-i phi Y / 2)
inline Unitary2 ry(double phi) {
    const double c = std::cos(phi / 2.0);
    const double s = std::sin(phi / 2.0);
    return {c, -s, s, c};
}
/// RZ(phi) = exp(-i phi Z / 2)
inline Unitary2 rz(double phi) {
    return {std::polar(1.0, -phi / 2.0), 0.0, 0.0, std::polar(1.0, phi / 2.0)};
}
/// exp(i theta Z)
inline Unitary2 exp_iz(double theta) {
    return {std::polar(1.0, theta), 0.0, 0.0, std::polar(1.0, -theta)};
}
/// exp(i theta X)
inline Unitary2 exp_ix(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c, Complex{0.0, s}, Complex{0.0, s}, c};
}

// Two-qubit matrices use the little-endian local basis: local index
// = b_low + 2 * b_high, where b_low is the first qubit argument.

/// Control on the low local bit, target on the high local bit.
inline Unitary4 cnot_low_controls() {
    Unitary4 m;
    m(0, 0) = 1.0;
    m(3, 1) = 1.0;
    m(2, 2) = 1.0;
    m(1, 3) = 1.0;
    return m;
}
inline Unitary4 cz_std() { return Unitary4::diagonal({1.0, 1.0, 1.0, -1.0}); }
/// diag(-1, 1, 1, 1): the control-Z variant that phases |00>.
inline Unitary4 cz4() { return Unitary4::diagonal({-1.0, 1.0, 1.0, 1.0}); }
inline Unitary4 cphase(double theta) {
    return Unitary4::diagonal({1.0, 1.0, 1.0, std::polar(1.0, theta)});
}
inline Unitary4 swap() {
    Unitary4 m;
    m(0, 0) = 1.0;
    m(2, 1) = 1.0;
    m(1, 2) = 1.0;
    m(3, 3) = 1.0;
    return m;
}

} // namespace matrices

// ---------------------------------------------------------------------------
// Circuit IR
// ---------------------------------------------------------------------------

/// Arbitrary 1-qubit unitary. `name` / `angle` remember the sugar the gate
/// came from so the text writer can round-trip it ("u" for explicit).
struct OneQubit {
    Unitary2 matrix;
    int target = 1;
    std::string name = "u";
    double angle = 0.0;
};

struct Cnot {
    int control = 1;
    int target = 2;
};

/// diag(1, 1, 1, -1)
struct CzStd {
    int control = 1;
    int target = 2;
};

/// diag(1, 1, 1, e^{i theta})
struct CPhase {
    double theta = 0.0;
    int control = 1;
    int target = 2;
};

using Gate = std::variant<OneQubit, Cnot, CzStd, CPhase>;

namespace gates {

inline Gate u(const Unitary2 &m, int q) { return OneQubit{m, q, "u", 0.0}; }
inline Gate h(int q) { return OneQubit{matrices::hadamard(), q, "h", 0.0}; }
inline Gate x(int q) { return OneQubit{matrices::pauli_x(), q, "x", 0.0}; }
inline Gate y(int q) { return OneQubit{matrices::pauli_y(), q, "y", 0.0}; }
inline Gate z(int q) { return OneQubit{matrices::pauli_z(), q, "z", 0.0}; }
inline Gate s(int q) { return OneQubit{matrices::s_gate(), q, "s", 0.0}; }
inline Gate t(int q) { return OneQubit{matrices::t_gate(), q, "t", 0.0}; }
inline Gate rx(double phi, int q) {
    return OneQubit{matrices::rx(phi), q, "rx", phi};
}
inline Gate ry(double phi, int q) {
    return OneQubit{matrices::ry(phi), q, "ry", phi};
}
inline Gate rz(double phi, int q) {
    return OneQubit{matrices::rz(phi), q, "rz", phi};
}
inline Gate cnot(int c, int t) { return Cnot{c, t}; }
inline Gate cz(int c, int t) { return CzStd{c, t}; }
inline Gate cphase(double theta, int c, int t) { return CPhase{theta, c, t}; }

} // namespace gates

struct Circuit {
    QubitCount n;
    std::vector<Gate> gates;

    explicit Circuit(QubitCount qubits) : n(qubits) {}
    Circuit(QubitCount qubits, std::vector<Gate> g)
        : n(qubits), gates(std::move(g)) {}

    Circuit &add(Gate g) {
        gates.push_back(std::move(g));
        return *this;
    }
};

struct ValidationError {
    std::size_t gate_index;
    std::string message;
};

/// Collects every violation; an empty result means the circuit is valid.
inline std::vector<ValidationError> validate_circuit(const Circuit &circ) {
    std::vector<ValidationError> errors;
    const int n = circ.n.value();
    auto in_range = [n](int q) { return q >= 1 && q <= n; };

    for (std::size_t i = 0; i < circ.gates.size(); ++i) {
        std::visit(
            [&](const auto &g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, OneQubit>) {
                    if (!in_range(g.target)) {
                        errors.push_back({i, "qubit index " +
                                                 std::to_string(g.target) +
                                                 " out of range"});
                    }
                    if (!g.matrix.is_unitary(1e-10)) {
                        errors.push_back({i, "non-unitary matrix"});
                    }
                } else {
                    if (!in_range(g.control)) {
                        errors.push_back({i, "control index " +
                                                 std::to_string(g.control) +
                                                 " out of range"});
                    }
                    if (!in_range(g.target)) {
                        errors.push_back({i, "target index " +
                                                 std::to_string(g.target) +
                                                 " out of range"});
                    }
                    if (g.control == g.target) {
                        errors.push_back({i, "control equals target"});
                    }
                    if constexpr (std::is_same_v<T, CPhase>) {
                        if (!std::isfinite(g.theta)) {
                            errors.push_back({i, "non-finite angle"});
                        }
                    }
                }
            },
            circ.gates[i]);
    }
    return errors;
}

/// Throws InvalidInput listing every violation.
inline void require_valid(const Circuit &circ) {
    const auto errors = validate_circuit(circ);
    if (errors.empty()) {
        return;
    }
    std::string msg = "invalid circuit:";
    for (const auto &e : errors) {
        msg += " [gate " + std::to_string(e.gate_index) + "] " + e.message + ";";
    }
    throw InvalidInput(msg);
}

// ---------------------------------------------------------------------------
// Elementary programs
// ---------------------------------------------------------------------------

/// The four single-photon generators.
///   Phase  e^{i theta Z} on qubit 1 (parity-dependent phase on modes)
///   Had    Hadamard on qubit 1 (mixes modes 2m and 2m+1)
///   CPerm  cyclic qubit permutation (mode bit rotation)
///   Cz4    diag(-1, 1, 1, 1) on qubits 1, 2 (negates modes divisible by 4)
enum class OpKind { Phase, Had, CPerm, Cz4 };

inline constexpr std::array<OpKind, 4> kAllOpKinds = {OpKind::Phase, OpKind::Had,
                                                      OpKind::CPerm, OpKind::Cz4};

inline const char *op_kind_name(OpKind kind) {
    switch (kind) {
    case OpKind::Phase:
        return "PHASE";
    case OpKind::Had:
        return "H";
    case OpKind::CPerm:
        return "CPERM";
    case OpKind::Cz4:
        return "CZ";
    }
    return "?";
}

inline OpKind op_kind_from_name(const std::string &name) {
    for (OpKind k : kAllOpKinds) {
        if (name == op_kind_name(k)) {
            return k;
        }
    }
    throw InvalidInput("unknown elementary op '" + name + "'");
}

struct ElementaryOp {
    OpKind kind = OpKind::Had;
    double theta = 0.0; // PHASE only; stored unreduced

    static ElementaryOp phase(double theta) { return {OpKind::Phase, theta}; }
    static ElementaryOp had() { return {OpKind::Had, 0.0}; }
    static ElementaryOp cperm() { return {OpKind::CPerm, 0.0}; }
    static ElementaryOp cz4() { return {OpKind::Cz4, 0.0}; }

    /// Structural equality; PHASE angles compared modulo 2 pi.
    [[nodiscard]] bool same_as(const ElementaryOp &other, double tol = 1e-12) const {
        if (kind != other.kind) {
            return false;
        }
        return kind != OpKind::Phase || is_zero_angle(theta - other.theta, tol);
    }
};

struct ElementaryProgram {
    QubitCount n;
    std::vector<ElementaryOp> ops;

    explicit ElementaryProgram(QubitCount qubits) : n(qubits) {}
    ElementaryProgram(QubitCount qubits, std::vector<ElementaryOp> o)
        : n(qubits), ops(std::move(o)) {}

    [[nodiscard]] std::size_t size() const { return ops.size(); }
    [[nodiscard]] bool empty() const { return ops.empty(); }

    ElementaryProgram &append(const ElementaryProgram &other) {
        if (!(other.n == n)) {
            throw InvalidInput("program qubit count mismatch");
        }
        ops.insert(ops.end(), other.ops.begin(), other.ops.end());
        return *this;
    }

    ElementaryProgram &push(ElementaryOp op) {
        ops.push_back(op);
        return *this;
    }

    /// CZ4 needs n >= 2; PHASE angles must be finite.
    void validate() const {
        for (std::size_t i = 0; i < ops.size(); ++i) {
            if (ops[i].kind == OpKind::Cz4 && n.value() < 2) {
                throw InvalidOperation("CZ at op " + std::to_string(i) +
                                       " requires at least 2 qubits");
            }
            if (ops[i].kind == OpKind::Phase && !std::isfinite(ops[i].theta)) {
                throw InvalidInput("non-finite PHASE angle at op " +
                                   std::to_string(i));
            }
        }
    }
};

/// Number of ops of each kind in a program.
struct OpCounts {
    std::array<std::size_t, 4> by_kind{};

    [[nodiscard]] std::size_t operator[](OpKind k) const {
        return by_kind[static_cast<std::size_t>(k)];
    }
    std::size_t &operator[](OpKind k) { return by_kind[static_cast<std::size_t>(k)]; }

    [[nodiscard]] std::size_t total() const {
        std::size_t t = 0;
        for (std::size_t c : by_kind) {
            t += c;
        }
        return t;
    }

    friend bool operator==(const OpCounts &, const OpCounts &) = default;
};

inline OpCounts count_ops(const ElementaryProgram &prog) {
    OpCounts counts;
    for (const ElementaryOp &op : prog.ops) {
        ++counts[op.kind];
    }
    return counts;
}

} // namespace oamq
