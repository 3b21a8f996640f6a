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
 * Small fixed-size and dynamic dense complex matrices.
 *
 * These are verification and decomposition aids, not a BLAS. Everything is
 * row-major and sized for 2x2 / 4x4 gates or d x d matrices with d <= 1024.
 */

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oamq {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Reduce an angle to (-pi, pi].
inline double normalize_angle(double theta) {
    double r = std::remainder(theta, 2.0 * kPi);
    if (r <= -kPi) {
        r += 2.0 * kPi;
    }
    return r;
}

/// True when theta is a multiple of 2*pi within tol.
inline bool is_zero_angle(double theta, double tol = 1e-12) {
    return std::abs(std::remainder(theta, 2.0 * kPi)) <= tol;
}

/// Row-major N x N complex matrix.
template <std::size_t N> class SmallMatrix {
  public:
    static constexpr std::size_t kDim = N;

    SmallMatrix() { data_.fill(Complex{0.0, 0.0}); }

    SmallMatrix(std::initializer_list<Complex> values) {
        if (values.size() != N * N) {
            throw std::invalid_argument("SmallMatrix: wrong number of entries");
        }
        std::size_t i = 0;
        for (const Complex &v : values) {
            data_[i++] = v;
        }
    }

    static SmallMatrix identity() {
        SmallMatrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static SmallMatrix diagonal(const std::array<Complex, N> &diag) {
        SmallMatrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = diag[i];
        }
        return m;
    }

    Complex &operator()(std::size_t row, std::size_t col) {
        return data_[row * N + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return data_[row * N + col];
    }

    [[nodiscard]] const std::array<Complex, N * N> &data() const {
        return data_;
    }

    [[nodiscard]] SmallMatrix adjoint() const {
        SmallMatrix out;
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t c = 0; c < N; ++c) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    friend SmallMatrix operator*(const SmallMatrix &a, const SmallMatrix &b) {
        SmallMatrix out;
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t k = 0; k < N; ++k) {
                const Complex a_rk = a(r, k);
                for (std::size_t c = 0; c < N; ++c) {
                    out(r, c) += a_rk * b(k, c);
                }
            }
        }
        return out;
    }

    friend SmallMatrix operator*(Complex s, const SmallMatrix &m) {
        SmallMatrix out = m;
        for (auto &v : out.data_) {
            v *= s;
        }
        return out;
    }

    /// Largest entrywise modulus of the difference.
    [[nodiscard]] double max_abs_diff(const SmallMatrix &other) const {
        double worst = 0.0;
        for (std::size_t i = 0; i < N * N; ++i) {
            worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
        }
        return worst;
    }

    /// max |(U^dagger U - I)_ij|
    [[nodiscard]] double unitarity_error() const {
        return (adjoint() * (*this)).max_abs_diff(identity());
    }

    [[nodiscard]] bool is_unitary(double tol = 1e-10) const {
        return unitarity_error() <= tol;
    }

  private:
    std::array<Complex, N * N> data_;
};

using Unitary2 = SmallMatrix<2>;
using Unitary4 = SmallMatrix<4>;

/// Kronecker product a (x) b, with b occupying the low index bits.
template <std::size_t A, std::size_t B>
SmallMatrix<A * B> kron(const SmallMatrix<A> &a, const SmallMatrix<B> &b) {
    SmallMatrix<A * B> out;
    for (std::size_t ar = 0; ar < A; ++ar) {
        for (std::size_t ac = 0; ac < A; ++ac) {
            for (std::size_t br = 0; br < B; ++br) {
                for (std::size_t bc = 0; bc < B; ++bc) {
                    out(ar * B + br, ac * B + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

/// Dynamic row-major square complex matrix.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim)
        : dim_(dim), data_(dim * dim, Complex{0.0, 0.0}) {}

    static DenseMatrix identity(std::size_t dim) {
        DenseMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    template <std::size_t N>
    static DenseMatrix from(const SmallMatrix<N> &small) {
        DenseMatrix m(N);
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t c = 0; c < N; ++c) {
                m(r, c) = small(r, c);
            }
        }
        return m;
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }

    Complex &operator()(std::size_t row, std::size_t col) {
        return data_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    [[nodiscard]] DenseMatrix adjoint() const {
        DenseMatrix out(dim_);
        for (std::size_t r = 0; r < dim_; ++r) {
            for (std::size_t c = 0; c < dim_; ++c) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    friend DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
        if (a.dim_ != b.dim_) {
            throw std::invalid_argument("DenseMatrix: dimension mismatch");
        }
        DenseMatrix out(a.dim_);
        for (std::size_t r = 0; r < a.dim_; ++r) {
            for (std::size_t k = 0; k < a.dim_; ++k) {
                const Complex a_rk = a(r, k);
                if (a_rk == Complex{0.0, 0.0}) {
                    continue;
                }
                for (std::size_t c = 0; c < a.dim_; ++c) {
                    out(r, c) += a_rk * b(k, c);
                }
            }
        }
        return out;
    }

    [[nodiscard]] double max_abs_diff(const DenseMatrix &other) const {
        if (dim_ != other.dim_) {
            throw std::invalid_argument("DenseMatrix: dimension mismatch");
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
        }
        return worst;
    }

    /// Entrywise distance after removing the best global phase e^{i phi}
    /// aligning *this to other (phase taken from the largest entry of other).
    [[nodiscard]] double max_abs_diff_up_to_phase(const DenseMatrix &other) const {
        if (dim_ != other.dim_) {
            throw std::invalid_argument("DenseMatrix: dimension mismatch");
        }
        std::size_t pivot = 0;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (std::abs(other.data_[i]) > std::abs(other.data_[pivot])) {
                pivot = i;
            }
        }
        if (std::abs(data_[pivot]) == 0.0) {
            return max_abs_diff(other) + 1.0;
        }
        const Complex phase = (other.data_[pivot] / data_[pivot]) /
                              std::abs(other.data_[pivot] / data_[pivot]);
        double worst = 0.0;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            worst = std::max(worst, std::abs(phase * data_[i] - other.data_[i]));
        }
        return worst;
    }

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

} // namespace oamq
