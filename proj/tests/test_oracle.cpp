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


#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oamq/oamq.hpp"
#include "support/brute_force.hpp"

using namespace oamq;
using namespace oamq::testing;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

} // namespace

TEST_CASE("apply_1q examples", "[oracle]") {
    SplitMix64 rng(21);
    const OamState r = random_state(QubitCount(3), rng);
    for (int q = 1; q <= 3; ++q) {
        OamState s = r;
        oracle::apply_1q(s, matrices::identity(), q);
        CHECK(s.max_abs_diff(r) == 0.0);
    }

    OamState h(QubitCount(2), 0);
    oracle::apply_1q(h, matrices::hadamard(), 1);
    OamState e(QubitCount(2), 0);
    apply_hadamard(e);
    CHECK(h.max_abs_diff(e) < 1e-15);

    OamState x(QubitCount(2), 0);
    oracle::apply_1q(x, matrices::pauli_x(), 2);
    CHECK(x[2] == Complex{1.0, 0.0});

    CHECK_THROWS_AS(oracle::apply_1q(x, matrices::pauli_x(), 3), InvalidInput);
    CHECK_THROWS_AS(oracle::apply_1q(x, matrices::pauli_x(), 0), InvalidInput);
}

TEST_CASE("apply_1q agrees with bit-string embedding", "[oracle][property]") {
    SplitMix64 rng(22);
    for (int nv = 1; nv <= 5; ++nv) {
        for (int q = 1; q <= nv; ++q) {
            const Unitary2 u = random_unitary2(rng);
            const OamState r = random_state(QubitCount(nv), rng);
            OamState s = r;
            oracle::apply_1q(s, u, q);
            CHECK(s.max_abs_diff(dense_apply(embed_one_qubit(u, q, nv), r)) < 1e-13);
        }
    }
}

TEST_CASE("apply_2q examples", "[oracle]") {
    SplitMix64 rng(23);
    const OamState r = random_state(QubitCount(2), rng);
    OamState s = r;
    oracle::apply_2q(s, Unitary4::identity(), 1, 2);
    CHECK(s.max_abs_diff(r) == 0.0);

    OamState z(QubitCount(2), 0);
    oracle::apply_2q(z, matrices::cz4(), 1, 2);
    CHECK(z[0] == Complex{-1.0, 0.0});

    // SWAP on every basis state of n = 2: bit (b1, b2) -> (b2, b1)
    const ModeIndex expected[4] = {0, 2, 1, 3};
    for (ModeIndex m = 0; m < 4; ++m) {
        OamState b(QubitCount(2), m);
        oracle::apply_2q(b, matrices::swap(), 1, 2);
        CHECK(b[expected[m]] == Complex{1.0, 0.0});
    }

    CHECK_THROWS_AS(oracle::apply_2q(s, matrices::swap(), 1, 1), InvalidInput);
    CHECK_THROWS_AS(oracle::apply_2q(s, matrices::swap(), 1, 3), InvalidInput);
}

TEST_CASE("apply_2q agrees with bit-string embedding", "[oracle][property]") {
    SplitMix64 rng(24);
    for (int nv = 2; nv <= 5; ++nv) {
        for (int a = 1; a <= nv; ++a) {
            for (int b = 1; b <= nv; ++b) {
                if (a == b) {
                    continue;
                }
                const Unitary4 u = kron(random_unitary2(rng), random_unitary2(rng)) *
                                   matrices::cphase(rng.angle()) *
                                   matrices::cnot_low_controls();
                const OamState r = random_state(QubitCount(nv), rng);
                OamState s = r;
                oracle::apply_2q(s, u, a, b);
                CHECK(s.max_abs_diff(dense_apply(embed_two_qubit(u, a, b, nv), r)) < 1e-13);
            }
        }
    }
}

TEST_CASE("run_circuit", "[oracle]") {
    SplitMix64 rng(25);
    const OamState r = random_state(QubitCount(2), rng);
    OamState s = r;
    oracle::run_circuit(s, Circuit{QubitCount(2)});
    CHECK(s.max_abs_diff(r) == 0.0);

    Circuit bell{QubitCount(2)};
    bell.add(gates::h(1)).add(gates::cnot(1, 2));
    OamState b(QubitCount(2), 0);
    oracle::run_circuit(b, bell);
    CHECK(std::abs(b[0] - Complex{kInvSqrt2, 0.0}) < 1e-15);
    CHECK(std::abs(b[3] - Complex{kInvSqrt2, 0.0}) < 1e-15);
    CHECK(std::abs(b[1]) + std::abs(b[2]) == 0.0);

    Circuit xx{QubitCount(2)};
    xx.add(gates::x(1)).add(gates::x(1));
    OamState t = r;
    oracle::run_circuit(t, xx);
    CHECK(t.max_abs_diff(r) == 0.0);

    Circuit bad{QubitCount(2)};
    bad.add(gates::cnot(1, 1));
    CHECK_THROWS_AS(oracle::run_circuit(t, bad), InvalidInput);
}

TEST_CASE("fidelity", "[oracle]") {
    SplitMix64 rng(26);
    const OamState a = random_state(QubitCount(3), rng);
    const OamState b = random_state(QubitCount(3), rng);
    CHECK(oracle::fidelity(a, a) == Catch::Approx(1.0).margin(1e-15));

    OamState phased = a;
    for (Complex &v : phased.amplitudes()) {
        v *= std::polar(1.0, 1.234);
    }
    CHECK(oracle::fidelity(a, phased) == Catch::Approx(1.0).margin(1e-15));
    CHECK(oracle::fidelity(phased, b) == Catch::Approx(oracle::fidelity(a, b)).margin(1e-15));
    CHECK(oracle::fidelity(a, b) == Catch::Approx(oracle::fidelity(b, a)).margin(1e-15));

    CHECK(oracle::fidelity(OamState(QubitCount(1), 0), OamState(QubitCount(1), 1)) == 0.0);
    CHECK_THROWS_AS(oracle::fidelity(a, OamState(QubitCount(2), 0)), InvalidInput);
}

TEST_CASE("dft_apply", "[oracle]") {
    const QubitCount n(3);
    OamState zero(n, 0);
    oracle::dft_apply(zero);
    for (ModeIndex k = 0; k < 8; ++k) {
        CHECK(std::abs(zero[k] - Complex{1.0 / std::sqrt(8.0), 0.0}) < 1e-15);
    }
    oracle::dft_apply(zero); // F^2 maps uniform to |0>
    CHECK(std::abs(zero[0] - Complex{1.0, 0.0}) < 1e-14);

    SplitMix64 rng(27);
    const OamState r = random_state(QubitCount(1), rng);
    OamState f = r;
    oracle::dft_apply(f);
    OamState h = r;
    apply_hadamard(h);
    CHECK(f.max_abs_diff(h) < 1e-15);

    for (int nv = 1; nv <= 10; ++nv) {
        OamState s = random_state(QubitCount(nv), rng);
        oracle::dft_apply(s);
        CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);
    }
    OamState big(QubitCount(oracle::kMaxDftQubits + 1), 0);
    CHECK_THROWS_AS(oracle::dft_apply(big), ResourceError);
}

TEST_CASE("elementary ops equal the oracle's tensor construction", "[oracle][property]") {
    SplitMix64 rng(28);
    for (int nv = 1; nv <= 10; ++nv) {
        const QubitCount n(nv);
        for (int trial = 0; trial < 5; ++trial) {
            const OamState r = random_state(n, rng);
            const double theta = rng.angle();

            OamState a = r;
            apply_phase(a, theta);
            OamState b = r;
            oracle::apply_1q(b, matrices::exp_iz(theta), 1);
            CHECK(a.max_abs_diff(b) < 1e-12);

            a = r;
            apply_hadamard(a);
            b = r;
            oracle::apply_1q(b, matrices::hadamard(), 1);
            CHECK(a.max_abs_diff(b) < 1e-12);

            a = r;
            apply_cperm(a);
            b = r;
            oracle::apply_qubit_rotation(b);
            CHECK(a.max_abs_diff(b) == 0.0);

            if (nv >= 2) {
                a = r;
                apply_cz(a);
                b = r;
                oracle::apply_2q(b, matrices::cz4(), 1, 2);
                CHECK(a.max_abs_diff(b) < 1e-12);
            }
        }
    }
}
