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
 * Portable seeded randomness.
 *
 * The generator is SplitMix64 (Steele, Lea, Flood 2014):
 *
 *     state += 0x9e3779b97f4a7c15
 *     z = state
 *     z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
 *     z = (z ^ (z >> 27)) * 0x94d049bb133111eb
 *     return z ^ (z >> 31)
 *
 * Derived draws are fixed too, so a reimplementation in another language
 * reproduces the same corpora from a seed:
 *   uniform01()      (next() >> 11) * 2^-53
 *   below(k)         next() % k           (k small, bias ignored)
 *   angle()          -pi + 2 pi * uniform01()
 *   gaussian()       Box-Muller, cos branch, u1 = 1 - uniform01()
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "oamq/core.hpp"
#include "oamq/linalg.hpp"

namespace oamq {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    std::uint64_t below(std::uint64_t k) { return next() % k; }

    double angle() { return -kPi + 2.0 * kPi * uniform01(); }

    double gaussian() {
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

  private:
    std::uint64_t state_;
};

/// Normalized state with i.i.d. complex Gaussian amplitudes.
inline OamState random_state(QubitCount n, SplitMix64 &rng) {
    std::vector<Complex> amp(n.dim());
    for (Complex &a : amp) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        a = Complex{re, im};
    }
    OamState state(n, std::move(amp));
    state.normalize();
    return state;
}

/// e^{i a} RZ(b) RY(c) RZ(e) with independent uniform angles.
inline Unitary2 random_unitary2(SplitMix64 &rng) {
    const double alpha = rng.angle();
    const double b = rng.angle();
    const double c = rng.angle();
    const double e = rng.angle();
    return std::polar(1.0, alpha) *
           (matrices::rz(b) * matrices::ry(c) * matrices::rz(e));
}

} // namespace oamq
