// Copyright 2026 The gaugedrift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAUGEDRIFT_LINALG_H
#define GAUGEDRIFT_LINALG_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gaugedrift {

using Complex = std::complex<double>;

/// Dense complex vector of amplitudes.
class StateVector {
   public:
    StateVector() = default;
    explicit StateVector(size_t dim) : amps_(dim) {
    }
    explicit StateVector(std::vector<Complex> amplitudes);

    /// |index> in a space of dimension dim.
    static StateVector basis(size_t dim, size_t index);

    size_t dim() const {
        return amps_.size();
    }
    Complex &operator[](size_t i) {
        return amps_[i];
    }
    const Complex &operator[](size_t i) const {
        return amps_[i];
    }
    std::span<Complex> amplitudes() {
        return amps_;
    }
    std::span<const Complex> amplitudes() const {
        return amps_;
    }

    double norm_squared() const;
    double norm() const;
    /// Copy scaled to unit norm. Throws std::domain_error on a zero vector.
    StateVector normalized() const;

    StateVector &operator+=(const StateVector &other);
    StateVector &operator-=(const StateVector &other);
    StateVector &operator*=(Complex s);

    friend StateVector operator+(StateVector a, const StateVector &b) {
        return a += b;
    }
    friend StateVector operator-(StateVector a, const StateVector &b) {
        return a -= b;
    }
    friend StateVector operator*(Complex s, StateVector v) {
        return v *= s;
    }

    bool operator==(const StateVector &) const = default;

   private:
    std::vector<Complex> amps_;
};

/// Dense complex matrix, row-major.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    /// Throws std::invalid_argument on size mismatch or non-finite entries.
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> row_major);

    static ComplexMatrix identity(size_t n);
    static ComplexMatrix zeros(size_t rows, size_t cols) {
        return ComplexMatrix(rows, cols);
    }
    /// |a><b|
    static ComplexMatrix outer(const StateVector &a, const StateVector &b);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    Complex &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<const Complex> data() const {
        return data_;
    }
    std::span<const Complex> row(size_t r) const {
        return std::span<const Complex>(data_).subspan(r * cols_, cols_);
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    /// max_ij |M_ij|
    double max_abs() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix m) {
        return m *= s;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

    bool operator==(const ComplexMatrix &) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// max |M - M^dagger|; requires a square matrix.
double hermiticity_defect(const ComplexMatrix &m);
/// max |U^dagger U - I|.
double unitarity_defect(const ComplexMatrix &u);
/// Largest singular value.
double spectral_norm(const ComplexMatrix &m);
/// Matrix power by repeated squaring.
ComplexMatrix matrix_power(const ComplexMatrix &m, size_t k);

struct HermitianEig {
    /// Ascending.
    std::vector<double> eigenvalues;
    /// Column j is the eigenvector for eigenvalues[j].
    ComplexMatrix eigenvectors;
};

/// M = Q diag(lambda) Q^dagger. Rejects non-square or non-Hermitian input
/// (tolerance tol::kHermitianInput) with std::invalid_argument.
HermitianEig hermitian_eig(const ComplexMatrix &m);

/// exp(sign * i * H) for Hermitian H, via the eigendecomposition.
ComplexMatrix expm_i_hermitian(const ComplexMatrix &h, int sign);

/// exp(sign * i * H) v without forming the exponential. Uses a Taylor
/// series on the vector with enough substeps that each has |H| <= 1.
StateVector expm_i_hermitian_apply(const ComplexMatrix &h, int sign, const StateVector &v);

/// M v. Throws std::invalid_argument on dimension mismatch.
StateVector apply(const ComplexMatrix &m, const StateVector &v);

/// <u|v>, conjugate-linear in u.
Complex overlap(const StateVector &u, const StateVector &v);

}  // namespace gaugedrift

#endif
