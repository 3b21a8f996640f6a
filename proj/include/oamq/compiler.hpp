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
 * Lowering of circuit IR to elementary programs.
 *
 * Only four operations are available: PHASE (e^{i theta Z} on qubit 1), H on
 * qubit 1, CZ4 = diag(-1,1,1,1) on qubits 1 and 2, and the cyclic qubit
 * permutation CPERM. Everything else is built from them:
 *
 *  - 1-qubit gates: ZXZ Euler angles, with e^{i theta X} = H e^{i theta Z} H,
 *    conjugated by CPERM powers that bring the target to position 1.
 *  - standard CZ on qubits (1,2): CZ4 * (iZ_1) * (iZ_2) = diag(1,1,1,-1).
 *  - CNOT: H on the target around the standard CZ.
 *  - SWAP on (1,2): three CNOTs.
 *  - any pair (j,k): rotate the lower label to position 1, bubble the other
 *    down to position 2 with adjacent swaps, apply, then undo.
 *
 * None of the generators can produce a global phase, so every fragment is
 * correct up to one. The phase is tracked exactly: a fragment F for target
 * gate G satisfies F = e^{i phase} G.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <type_traits>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oamq/core.hpp"
#include "oamq/linalg.hpp"

namespace oamq {

/// u = e^{i alpha} e^{i theta1 Z} e^{i theta2 X} e^{i theta3 Z}
struct EulerAngles {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double theta3 = 0.0;
    double alpha = 0.0;

    [[nodiscard]] Unitary2 reconstruct() const {
        return std::polar(1.0, alpha) * (matrices::exp_iz(theta1) *
                                         matrices::exp_ix(theta2) *
                                         matrices::exp_iz(theta3));
    }
};

namespace detail {

inline constexpr double kDegenerate = 1e-12;

inline void require_unitary(const Unitary2 &u) {
    if (!u.is_unitary(1e-10)) {
        throw InvalidInput("matrix is not unitary within 1e-10");
    }
}

/// Moves `angle` into (-pi/2, pi/2] by adding multiples of pi. Each pi
/// shift flips the sign of exp(i angle Z), which is absorbed into `phase`.
inline void fold_half_turn(double &angle, double &phase) {
    angle = normalize_angle(angle);
    if (angle > kPi / 2.0) {
        angle -= kPi;
        phase += kPi;
    } else if (angle <= -kPi / 2.0) {
        angle += kPi;
        phase += kPi;
    }
}

} // namespace detail

/// ZXZ Euler angles. theta1 and theta3 are folded into (-pi/2, pi/2] and
/// theta2 lies in [-pi/2, pi/2], except for diagonal input, where the whole
/// rotation goes to theta1 in (-pi, pi].
inline EulerAngles euler_zxz(const Unitary2 &u) {
    detail::require_unitary(u);
    const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    EulerAngles e;
    e.alpha = std::arg(det) / 2.0;
    const Complex unphase = std::polar(1.0, -e.alpha);
    // V = e^{-i alpha} u = [[p, q], [-q*, p*]] with
    // p = e^{i(t1+t3)} cos t2,  q = i e^{i(t1-t3)} sin t2.
    const Complex p = unphase * u(0, 0);
    const Complex q = unphase * u(0, 1);
    const double abs_p = std::abs(p);
    const double abs_q = std::abs(q);

    if (abs_q < detail::kDegenerate) {
        e.theta1 = normalize_angle(std::arg(p));
        return e;
    }
    e.theta2 = std::atan2(abs_q, abs_p);
    if (abs_p < detail::kDegenerate) {
        e.theta2 = kPi / 2.0;
        e.theta1 = std::arg(q) - kPi / 2.0;
    } else {
        // theta2 and -theta2 both fit, with theta1 - theta3 shifted by pi.
        // Prefer the one leaving more outer angles at zero (rx lowers to a
        // single HAD-conjugated PHASE that way).
        const double sum = std::arg(p);
        auto candidate = [&](double t2, double diff) {
            EulerAngles c = e;
            c.theta2 = t2;
            c.theta1 = (sum + diff) / 2.0;
            c.theta3 = (sum - diff) / 2.0;
            detail::fold_half_turn(c.theta1, c.alpha);
            detail::fold_half_turn(c.theta3, c.alpha);
            return c;
        };
        auto zeros = [](const EulerAngles &c) {
            return (is_zero_angle(c.theta1) ? 1 : 0) + (is_zero_angle(c.theta3) ? 1 : 0);
        };
        const EulerAngles pos = candidate(e.theta2, std::arg(q) - kPi / 2.0);
        const EulerAngles neg = candidate(-e.theta2, std::arg(q) + kPi / 2.0);
        e = zeros(neg) > zeros(pos) ? neg : pos;
        e.alpha = normalize_angle(e.alpha);
        return e;
    }
    detail::fold_half_turn(e.theta1, e.alpha);
    detail::fold_half_turn(e.theta3, e.alpha);
    e.alpha = normalize_angle(e.alpha);
    return e;
}

/// Elementary program together with the global phase it carries relative
/// to the gate it implements: program == e^{i phase} * gate.
struct Fragment {
    ElementaryProgram program;
    double phase = 0.0;

    explicit Fragment(QubitCount n) : program(n) {}
};

namespace detail {

inline void push_cperms(ElementaryProgram &prog, int count) {
    for (int i = 0; i < count; ++i) {
        prog.push(ElementaryOp::cperm());
    }
}

inline void push_phase(ElementaryProgram &prog, double theta) {
    if (!is_zero_angle(theta)) {
        prog.push(ElementaryOp::phase(normalize_angle(theta)));
    }
}

inline void check_index(int j, QubitCount n) {
    if (j < 1 || j > n.value()) {
        throw InvalidInput("qubit index " + std::to_string(j) +
                           " out of range for n = " + std::to_string(n.value()));
    }
}

inline void require_two_qubits(QubitCount n) {
    if (n.value() < 2) {
        throw InvalidOperation("two-qubit synthesis requires n >= 2");
    }
}

} // namespace detail

struct Route {
    ElementaryProgram pre;
    ElementaryProgram post;
};

/// pre = CPERM^{(n-j+1) mod n} brings qubit j to position 1;
/// post = CPERM^{(j-1) mod n} undoes it.
inline Route route_to_front(int j, QubitCount n) {
    detail::check_index(j, n);
    Route r{ElementaryProgram(n), ElementaryProgram(n)};
    detail::push_cperms(r.pre, (n.value() - j + 1) % n.value());
    detail::push_cperms(r.post, (j - 1) % n.value());
    return r;
}

/// Action on qubit 1 only, before routing. Three shapes, all up to phase:
///   diagonal            PHASE(t)
///   |u00| = |u01|       PHASE(y) H PHASE(x)        (u ~ Pz(x) H Pz(y))
///   otherwise           PHASE(t3) H PHASE(t2) H PHASE(t1)
/// Zero angles are dropped.
inline Fragment lower_1q_front(const Unitary2 &u, QubitCount n) {
    detail::require_unitary(u);
    Fragment f(n);
    const double mag00 = std::abs(u(0, 0));
    if (std::abs(mag00 * mag00 - 0.5) < detail::kDegenerate) {
        // Pz(x) H Pz(y) = (1/sqrt2) [[e^{i(x+y)},  e^{i(x-y)}],
        //                            [e^{-i(x-y)}, -e^{-i(x+y)}]], det -1.
        const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
        double beta = std::arg(-det) / 2.0;
        const Complex unphase = std::polar(1.0, -beta);
        const double sum = std::arg(unphase * u(0, 0));
        const double diff = std::arg(unphase * u(0, 1));
        double x = (sum + diff) / 2.0;
        double y = (sum - diff) / 2.0;
        detail::fold_half_turn(x, beta);
        detail::fold_half_turn(y, beta);
        detail::push_phase(f.program, y);
        f.program.push(ElementaryOp::had());
        detail::push_phase(f.program, x);
        f.phase = normalize_angle(-beta);
        return f;
    }
    const EulerAngles e = euler_zxz(u);
    if (is_zero_angle(e.theta2)) {
        detail::push_phase(f.program, e.theta1 + e.theta3);
    } else {
        detail::push_phase(f.program, e.theta3);
        f.program.push(ElementaryOp::had());
        detail::push_phase(f.program, e.theta2);
        f.program.push(ElementaryOp::had());
        detail::push_phase(f.program, e.theta1);
    }
    f.phase = normalize_angle(-e.alpha);
    return f;
}

/// u on qubit j, up to the tracked global phase.
inline Fragment compile_1q(const Unitary2 &u, int j, QubitCount n) {
    detail::check_index(j, n);
    Fragment core = lower_1q_front(u, n);
    if (core.program.empty()) {
        return core;
    }
    const Route route = route_to_front(j, n);
    Fragment f(n);
    f.phase = core.phase;
    f.program.append(route.pre).append(core.program).append(route.post);
    return f;
}

// ---------------------------------------------------------------------------
// Gates on positions 1 and 2
// ---------------------------------------------------------------------------

namespace detail {

/// e^{i theta Z} on qubit 2.
inline void push_phase_on_2(ElementaryProgram &prog, double theta) {
    const Route r = route_to_front(2, prog.n);
    prog.append(r.pre);
    push_phase(prog, theta);
    prog.append(r.post);
}

inline void push_had_on_2(ElementaryProgram &prog) {
    const Route r = route_to_front(2, prog.n);
    prog.append(r.pre).push(ElementaryOp::had()).append(r.post);
}

/// CZ4 (iZ_1)(iZ_2) = -CZ4 Z_1 Z_2 = diag(1,1,1,-1); exact, no phase.
inline void push_std_cz(ElementaryProgram &prog) {
    prog.push(ElementaryOp::cz4());
    push_phase(prog, kPi / 2.0);
    push_phase_on_2(prog, kPi / 2.0);
}

/// CNOT with the control at position `control_pos` (1 or 2); exact.
inline void push_cnot(ElementaryProgram &prog, int control_pos) {
    if (control_pos == 1) {
        push_had_on_2(prog);
        push_std_cz(prog);
        push_had_on_2(prog);
    } else {
        prog.push(ElementaryOp::had());
        push_std_cz(prog);
        prog.push(ElementaryOp::had());
    }
}

/// Exact SWAP of positions 1 and 2. The outer CNOTs target position 1 so
/// that only the middle one pays for routing an H to position 2.
inline void push_swap(ElementaryProgram &prog) {
    push_cnot(prog, 2);
    push_cnot(prog, 1);
    push_cnot(prog, 2);
}

/// diag(1,1,1,e^{i theta}) up to e^{-i theta/4}:
///   CPhase = exp(i theta/4 (1 - Z1 - Z2 + Z1 Z2)), and
///   exp(i phi Z1 Z2) = CNOT(2->1) exp(i phi Z1) CNOT(2->1).
/// Returns the phase of the emitted ops relative to CPhase.
inline double push_cphase(ElementaryProgram &prog, double theta) {
    push_phase(prog, -theta / 4.0);
    push_phase_on_2(prog, -theta / 4.0);
    push_cnot(prog, 2);
    push_phase(prog, theta / 4.0);
    push_cnot(prog, 2);
    return -theta / 4.0;
}

} // namespace detail

/// Standard CZ diag(1,1,1,-1) on qubits (1,2), from one CZ4 plus Z
/// corrections on both qubits.
inline Fragment synth_std_cz_first2(QubitCount n) {
    detail::require_two_qubits(n);
    Fragment f(n);
    detail::push_std_cz(f.program);
    return f;
}

/// SWAP on qubits (1,2) as three CNOTs over the synthesized standard CZ.
inline Fragment compile_swap_first2(QubitCount n) {
    detail::require_two_qubits(n);
    Fragment f(n);
    detail::push_swap(f.program);
    return f;
}

/// Three-CNOT swap with the native CZ4 used directly as the entangler:
///   (H_2 CZ4 H_2) (H_1 CZ4 H_1) (H_2 CZ4 H_2)
/// The -Z (x) Z carried by each CZ4 cancels over the three blocks, so this
/// is exactly SWAP; swap_recipe_residual() checks it.
inline Fragment literal_swap_first2(QubitCount n) {
    detail::require_two_qubits(n);
    Fragment f(n);
    auto &p = f.program;
    auto cnot_like = [&p](int control_pos) {
        if (control_pos == 1) {
            detail::push_had_on_2(p);
            p.push(ElementaryOp::cz4());
            detail::push_had_on_2(p);
        } else {
            p.push(ElementaryOp::had());
            p.push(ElementaryOp::cz4());
            p.push(ElementaryOp::had());
        }
    };
    cnot_like(1);
    cnot_like(2);
    cnot_like(1);
    return f;
}

// ---------------------------------------------------------------------------
// Two-qubit gates on arbitrary pairs
// ---------------------------------------------------------------------------

enum class TwoQubitKind { Cnot, CzStd, CPhase };

namespace detail {

/// Emits CPERMs / first-two swaps while tracking which logical qubit sits
/// at which position.
class Router {
  public:
    explicit Router(ElementaryProgram &out)
        : out_(out), n_(out.n.value()),
          at_(static_cast<std::size_t>(n_) + 1), pos_(static_cast<std::size_t>(n_) + 1) {
        for (int k = 1; k <= n_; ++k) {
            at_[static_cast<std::size_t>(k)] = k;
            pos_[static_cast<std::size_t>(k)] = k;
        }
    }

    [[nodiscard]] int position_of(int logical) const {
        return pos_[static_cast<std::size_t>(logical)];
    }

    /// CPERM^count: position p -> p+1, n -> 1.
    void rotate(int count) {
        count %= n_;
        push_cperms(out_, count);
        for (int k = 1; k <= n_; ++k) {
            int &p = pos_[static_cast<std::size_t>(k)];
            p = (p - 1 + count) % n_ + 1;
            at_[static_cast<std::size_t>(p)] = k;
        }
    }

    void swap_front() {
        push_swap(out_);
        std::swap(at_[1], at_[2]);
        pos_[static_cast<std::size_t>(at_[1])] = 1;
        pos_[static_cast<std::size_t>(at_[2])] = 2;
    }

    /// Swap of positions q and q+1, conjugated to the front.
    void swap_adjacent(int q) {
        rotate((n_ - q + 1) % n_);
        swap_front();
        rotate((q - 1) % n_);
    }

    [[nodiscard]] bool is_identity() const {
        for (int k = 1; k <= n_; ++k) {
            if (pos_[static_cast<std::size_t>(k)] != k) {
                return false;
            }
        }
        return true;
    }

  private:
    ElementaryProgram &out_;
    int n_;
    std::vector<int> at_;  // position -> logical
    std::vector<int> pos_; // logical -> position
};

} // namespace detail

/// Two-qubit gate on (control, target), any placement. The lower label is
/// rotated to position 1; the other is bubbled down to position 2 by
/// adjacent swaps (positions q, q+1 with q < n; qubits n and 1 are not
/// treated as adjacent). The routing is undone afterwards.
inline Fragment compile_2q(TwoQubitKind kind, int control, int target,
                           QubitCount n, double theta = 0.0) {
    detail::check_index(control, n);
    detail::check_index(target, n);
    if (control == target) {
        throw InvalidInput("control equals target");
    }
    detail::require_two_qubits(n);
    Fragment f(n);
    if (kind == TwoQubitKind::CPhase && is_zero_angle(theta)) {
        return f;
    }

    const int lo = std::min(control, target);
    const int hi = std::max(control, target);
    const int nq = n.value();
    detail::Router router(f.program);
    router.rotate((nq - lo + 1) % nq);
    const int start = router.position_of(hi);
    for (int q = start - 1; q >= 2; --q) {
        router.swap_adjacent(q);
    }

    switch (kind) {
    case TwoQubitKind::Cnot:
        detail::push_cnot(f.program, router.position_of(control));
        break;
    case TwoQubitKind::CzStd:
        detail::push_std_cz(f.program);
        break;
    case TwoQubitKind::CPhase:
        f.phase = normalize_angle(detail::push_cphase(f.program, theta));
        break;
    }

    for (int q = 2; q <= start - 1; ++q) {
        router.swap_adjacent(q);
    }
    router.rotate((lo - 1) % nq);
    if (!router.is_identity()) {
        throw std::logic_error("compile_2q: routing did not restore the layout");
    }
    return f;
}

// ---------------------------------------------------------------------------
// Peephole optimizer
// ---------------------------------------------------------------------------

/// Stack-based local rewriting to a fixpoint:
///   PHASE(a) PHASE(b) -> PHASE(a+b);  PHASE(0 mod 2pi) -> nothing
///   H H -> nothing;  CZ CZ -> nothing;  CPERM^n -> nothing
/// PHASE angles are emitted in (-pi, pi]. Semantics are preserved exactly
/// (PHASE has period 2 pi), and the op count never grows.
inline ElementaryProgram optimize(const ElementaryProgram &prog) {
    const int n = prog.n.value();
    std::vector<ElementaryOp> out;
    std::vector<int> cperm_run; // length of the CPERM run ending at each slot
    out.reserve(prog.ops.size());
    cperm_run.reserve(prog.ops.size());

    auto pop = [&]() {
        out.pop_back();
        cperm_run.pop_back();
    };

    for (const ElementaryOp &op : prog.ops) {
        switch (op.kind) {
        case OpKind::Phase: {
            if (!out.empty() && out.back().kind == OpKind::Phase) {
                const double merged = out.back().theta + op.theta;
                if (is_zero_angle(merged)) {
                    pop();
                } else {
                    out.back().theta = normalize_angle(merged);
                }
            } else if (!is_zero_angle(op.theta)) {
                out.push_back(ElementaryOp::phase(normalize_angle(op.theta)));
                cperm_run.push_back(0);
            }
            break;
        }
        case OpKind::Had:
        case OpKind::Cz4:
            if (!out.empty() && out.back().kind == op.kind) {
                pop();
            } else {
                out.push_back(op);
                cperm_run.push_back(0);
            }
            break;
        case OpKind::CPerm: {
            const int run = cperm_run.empty() ? 1 : cperm_run.back() + 1;
            out.push_back(op);
            cperm_run.push_back(run);
            if (run == n) {
                for (int i = 0; i < n; ++i) {
                    pop();
                }
            }
            break;
        }
        }
    }
    return ElementaryProgram(prog.n, std::move(out));
}

// ---------------------------------------------------------------------------
// Whole circuits
// ---------------------------------------------------------------------------

struct CompileStats {
    OpCounts totals;
    /// Ops emitted for each source gate, before whole-program optimization.
    std::vector<std::size_t> per_gate_costs;
    /// Fragment phase for each source gate.
    std::vector<double> per_gate_phases;
    /// program == e^{i global_phase} * circuit, reduced to (-pi, pi].
    double global_phase = 0.0;
};

struct CompileOptions {
    bool optimize = true;
};

struct CompileResult {
    ElementaryProgram program;
    CompileStats stats;
};

inline Fragment compile_gate(const Gate &gate, QubitCount n) {
    return std::visit(
        [&](const auto &g) -> Fragment {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, OneQubit>) {
                return compile_1q(g.matrix, g.target, n);
            } else if constexpr (std::is_same_v<T, Cnot>) {
                return compile_2q(TwoQubitKind::Cnot, g.control, g.target, n);
            } else if constexpr (std::is_same_v<T, CzStd>) {
                return compile_2q(TwoQubitKind::CzStd, g.control, g.target, n);
            } else {
                return compile_2q(TwoQubitKind::CPhase, g.control, g.target, n,
                                  g.theta);
            }
        },
        gate);
}

inline CompileResult compile_circuit(const Circuit &circ,
                                     const CompileOptions &options = {}) {
    require_valid(circ);
    ElementaryProgram program(circ.n);
    CompileStats stats;
    double phase = 0.0;
    for (const Gate &g : circ.gates) {
        Fragment f = compile_gate(g, circ.n);
        stats.per_gate_costs.push_back(f.program.size());
        stats.per_gate_phases.push_back(f.phase);
        phase += f.phase;
        program.append(f.program);
    }
    if (options.optimize) {
        program = optimize(program);
    }
    stats.global_phase = normalize_angle(phase);
    stats.totals = count_ops(program);
    return {std::move(program), std::move(stats)};
}

// ---------------------------------------------------------------------------
// Cost bounds
// ---------------------------------------------------------------------------

/// Any 1-qubit gate lowers to at most n CPERMs plus 5 ops on position 1.
inline std::size_t one_qubit_cost_bound(QubitCount n) {
    return 2 * static_cast<std::size_t>(n.value()) + 7;
}

/// Quadratic envelope C n^2 + C' for 2-qubit gates. The unoptimized worst
/// pair (1, n) costs 12 n^2 + 9 n - 55 ops for CNOT / CZ and 8 more for
/// CPhase, which stays under 13 n^2 for every n >= 2.
inline constexpr std::size_t kTwoQubitQuadratic = 13;
inline constexpr std::size_t kTwoQubitConstant = 0;

inline std::size_t two_qubit_cost_bound(QubitCount n) {
    const auto nn = static_cast<std::size_t>(n.value());
    return kTwoQubitQuadratic * nn * nn + kTwoQubitConstant;
}

} // namespace oamq
