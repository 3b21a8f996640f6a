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

Complex amp(double re, double im = 0.0) { return {re, im}; }

} // namespace

TEST_CASE("apply_phase examples", "[elementary]") {
    OamState s(QubitCount(1), 0);
    apply_phase(s, 0.3);
    CHECK(std::abs(s[0] - std::polar(1.0, 0.3)) < 1e-15);

    OamState t(QubitCount(2), 3);
    apply_phase(t, 0.3);
    CHECK(std::abs(t[3] - std::polar(1.0, -0.3)) < 1e-15);

    SplitMix64 rng(1);
    const OamState r = random_state(QubitCount(4), rng);
    OamState u = r;
    apply_phase(u, 0.0);
    CHECK(u.max_abs_diff(r) == 0.0);
}

TEST_CASE("apply_hadamard examples", "[elementary]") {
    OamState s(QubitCount(1), 0);
    apply_hadamard(s);
    CHECK(std::abs(s[0] - amp(kInvSqrt2)) < 1e-15);
    CHECK(std::abs(s[1] - amp(kInvSqrt2)) < 1e-15);

    OamState t(QubitCount(1), 1);
    apply_hadamard(t);
    CHECK(std::abs(t[0] - amp(kInvSqrt2)) < 1e-15);
    CHECK(std::abs(t[1] - amp(-kInvSqrt2)) < 1e-15);

    SplitMix64 rng(2);
    const OamState r = random_state(QubitCount(5), rng);
    OamState u = r;
    apply_hadamard(u);
    apply_hadamard(u);
    CHECK(u.max_abs_diff(r) < 1e-12);
}

TEST_CASE("apply_cperm examples", "[elementary]") {
    OamState s(QubitCount(2), 1);
    apply_cperm(s);
    CHECK(s[2] == amp(1.0));

    OamState t(QubitCount(2), 3);
    apply_cperm(t);
    CHECK(t[3] == amp(1.0));

    SplitMix64 rng(3);
    const OamState r = random_state(QubitCount(1), rng);
    OamState u = r;
    apply_cperm(u);
    CHECK(u.max_abs_diff(r) == 0.0);
}

TEST_CASE("apply_cz examples", "[elementary]") {
    OamState s(QubitCount(2), 0);
    apply_cz(s);
    CHECK(s[0] == amp(-1.0));

    OamState t(QubitCount(2), 2);
    apply_cz(t);
    CHECK(t[2] == amp(1.0));

    OamState u(QubitCount(3), std::vector<Complex>(8));
    u[0] = kInvSqrt2;
    u[4] = kInvSqrt2;
    apply_cz(u);
    CHECK(u[0] == amp(-kInvSqrt2));
    CHECK(u[4] == amp(-kInvSqrt2));

    OamState one(QubitCount(1), 0);
    CHECK_THROWS_AS(apply_cz(one), InvalidOperation);
}

TEST_CASE("apply_program", "[elementary]") {
    SplitMix64 rng(4);
    const OamState r = random_state(QubitCount(3), rng);

    OamState a = r;
    apply_program(a, ElementaryProgram(QubitCount(3)));
    CHECK(a.max_abs_diff(r) == 0.0);

    ElementaryProgram hh(QubitCount(3));
    hh.push(ElementaryOp::had()).push(ElementaryOp::had());
    apply_program(a, hh);
    CHECK(a.max_abs_diff(r) < 1e-12);

    ElementaryProgram cp(QubitCount(2));
    cp.push(ElementaryOp::cperm());
    OamState b(QubitCount(2), 1);
    apply_program(b, cp);
    CHECK(b[2] == amp(1.0));

    CHECK_THROWS_AS(apply_program(a, cp), InvalidInput);
}

TEST_CASE("elementary_unitary examples", "[elementary]") {
    const DenseMatrix p = elementary_unitary(ElementaryOp::phase(0.7), QubitCount(1));
    CHECK(std::abs(p(0, 0) - std::polar(1.0, 0.7)) < 1e-15);
    CHECK(std::abs(p(1, 1) - std::polar(1.0, -0.7)) < 1e-15);
    CHECK(p(0, 1) == amp(0.0));

    const DenseMatrix cz = elementary_unitary(ElementaryOp::cz4(), QubitCount(2));
    CHECK(cz.max_abs_diff(DenseMatrix::from(matrices::cz4())) == 0.0);

    const DenseMatrix g = elementary_unitary(ElementaryOp::cperm(), QubitCount(2));
    CHECK(g.max_abs_diff(DenseMatrix::from(matrices::swap())) == 0.0);

    CHECK_THROWS_AS(elementary_unitary(ElementaryOp::had(), QubitCount(kMaxDenseQubits + 1)),
                    ResourceError);
    CHECK_THROWS_AS(elementary_unitary(ElementaryOp::cz4(), QubitCount(1)),
                    InvalidOperation);
}

TEST_CASE("elementary ops are unitary", "[elementary][property]") {
    for (int nv = 1; nv <= 8; ++nv) {
        const QubitCount n(nv);
        std::vector<ElementaryOp> ops = {ElementaryOp::phase(1.1), ElementaryOp::had(),
                                         ElementaryOp::cperm()};
        if (nv >= 2) {
            ops.push_back(ElementaryOp::cz4());
        }
        for (const ElementaryOp &op : ops) {
            const DenseMatrix m = elementary_unitary(op, n);
            CHECK((m.adjoint() * m).max_abs_diff(DenseMatrix::identity(n.dim())) < 1e-12);
        }
    }
}

TEST_CASE("tensor-factor law against Kronecker products", "[elementary][property]") {
    for (int nv = 1; nv <= 6; ++nv) {
        const QubitCount n(nv);
        CAPTURE(nv);
        for (double theta : {0.0, 0.4, -2.9, kPi}) {
            const ElementaryOp op = ElementaryOp::phase(theta);
            CHECK(elementary_unitary(op, n).max_abs_diff(expected_op_matrix(op, nv)) < 1e-15);
        }
        CHECK(elementary_unitary(ElementaryOp::had(), n)
                  .max_abs_diff(expected_op_matrix(ElementaryOp::had(), nv)) < 1e-15);
        CHECK(elementary_unitary(ElementaryOp::cperm(), n)
                  .max_abs_diff(expected_op_matrix(ElementaryOp::cperm(), nv)) == 0.0);
        if (nv >= 2) {
            CHECK(elementary_unitary(ElementaryOp::cz4(), n)
                      .max_abs_diff(expected_op_matrix(ElementaryOp::cz4(), nv)) == 0.0);
        }
    }
}

TEST_CASE("cperm is the qubit rotation on every basis state", "[elementary][property]") {
    for (int nv = 1; nv <= 8; ++nv) {
        const QubitCount n(nv);
        for (ModeIndex m = 0; m < n.dim(); ++m) {
            OamState s(n, m);
            apply_cperm(s);
            const ModeIndex expected = mode_of_bits(rotate_bits(bits_of_mode(m, n)), n);
            REQUIRE(s[expected] == amp(1.0));
        }
    }
}

TEST_CASE("cperm has order n exactly", "[elementary][property]") {
    for (int nv = 1; nv <= 10; ++nv) {
        const QubitCount n(nv);
        std::vector<ModeIndex> perm(n.dim());
        for (ModeIndex m = 0; m < n.dim(); ++m) {
            perm[m] = m;
        }
        OamState s(n, std::vector<Complex>(n.dim()));
        for (ModeIndex m = 0; m < n.dim(); ++m) {
            s[m] = static_cast<double>(m);
        }
        for (int k = 1; k <= nv; ++k) {
            apply_cperm(s);
            bool identity = true;
            for (ModeIndex m = 0; m < n.dim(); ++m) {
                identity = identity && s[m] == amp(static_cast<double>(m));
            }
            CAPTURE(nv, k);
            // the permutation only returns to the identity at k = n (n > 1)
            REQUIRE(identity == (k == nv));
        }
    }
}

TEST_CASE("group relations on random states", "[elementary][property]") {
    SplitMix64 rng(11);
    for (int nv = 1; nv <= 10; ++nv) {
        const QubitCount n(nv);
        const OamState r = random_state(n, rng);

        OamState h = r;
        apply_hadamard(h);
        apply_hadamard(h);
        CHECK(h.max_abs_diff(r) < 1e-12);

        if (nv >= 2) {
            OamState c = r;
            apply_cz(c);
            apply_cz(c);
            CHECK(c.max_abs_diff(r) == 0.0);
        }

        const double a = rng.angle();
        const double b = rng.angle();
        OamState p1 = r;
        apply_phase(p1, a);
        apply_phase(p1, b);
        OamState p2 = r;
        apply_phase(p2, a + b);
        CHECK(p1.max_abs_diff(p2) < 1e-12);
    }
}

TEST_CASE("single ops preserve the norm", "[elementary][property]") {
    SplitMix64 rng(12);
    for (int nv = 2; nv <= 10; ++nv) {
        const QubitCount n(nv);
        for (const ElementaryOp &op :
             {ElementaryOp::phase(rng.angle()), ElementaryOp::had(), ElementaryOp::cperm(),
              ElementaryOp::cz4()}) {
            OamState s = random_state(n, rng);
            apply_op(s, op);
            CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("program_unitary matches brute-force products", "[elementary][property]") {
    SplitMix64 rng(13);
    for (int nv = 1; nv <= 4; ++nv) {
        const ElementaryProgram p = random_program(QubitCount(nv), 25, rng);
        CHECK(program_unitary(p).max_abs_diff(expected_program_matrix(p)) < 1e-12);
    }
}
