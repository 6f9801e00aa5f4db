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

#include "gaugedrift/linalg.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gaugedrift/tolerances.h"

namespace gaugedrift {

namespace {

void require_same_dim(size_t a, size_t b, const char *what) {
    if (a != b) {
        throw std::invalid_argument(
            std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

using RowMajorMap = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using MutableRowMajorMap = Eigen::Map<Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using VectorMap = Eigen::Map<const Eigen::VectorXcd>;
using MutableVectorMap = Eigen::Map<Eigen::VectorXcd>;

RowMajorMap map(const ComplexMatrix &m) {
    return RowMajorMap(m.data().data(), static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix &m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
}

StateVector StateVector::basis(size_t dim, size_t index) {
    if (index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(index) + " >= dimension " + std::to_string(dim));
    }
    StateVector v(dim);
    v[index] = 1.0;
    return v;
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const Complex &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

double StateVector::norm() const {
    return std::sqrt(norm_squared());
}

StateVector StateVector::normalized() const {
    double n = norm();
    if (n == 0) {
        throw std::domain_error("cannot normalize a zero vector");
    }
    StateVector out = *this;
    out *= 1.0 / n;
    return out;
}

StateVector &StateVector::operator+=(const StateVector &other) {
    require_same_dim(dim(), other.dim(), "StateVector +");
    for (size_t i = 0; i < amps_.size(); i++) {
        amps_[i] += other.amps_[i];
    }
    return *this;
}

StateVector &StateVector::operator-=(const StateVector &other) {
    require_same_dim(dim(), other.dim(), "StateVector -");
    for (size_t i = 0; i < amps_.size(); i++) {
        amps_[i] -= other.amps_[i];
    }
    return *this;
}

StateVector &StateVector::operator*=(Complex s) {
    for (Complex &a : amps_) {
        a *= s;
    }
    return *this;
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match dimensions");
    }
    for (const Complex &z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("ComplexMatrix: non-finite entry");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(const StateVector &a, const StateVector &b) {
    ComplexMatrix m(a.dim(), b.dim());
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < b.dim(); c++) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (size_t i = 0; i < std::min(rows_, cols_); i++) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0;
    for (const Complex &z : data_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(rows_, other.rows_, "ComplexMatrix + (rows)");
    require_same_dim(cols_, other.cols_, "ComplexMatrix + (cols)");
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] += other.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(rows_, other.rows_, "ComplexMatrix - (rows)");
    require_same_dim(cols_, other.cols_, "ComplexMatrix - (cols)");
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
    for (Complex &z : data_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.cols(), b.rows(), "ComplexMatrix *");
    ComplexMatrix out(a.rows(), b.cols());
    if (out.rows() == 0 || out.cols() == 0 || a.cols() == 0) {
        return out;
    }
    MutableRowMajorMap(&out(0, 0), static_cast<Eigen::Index>(out.rows()), static_cast<Eigen::Index>(out.cols())).noalias() =
        map(a) * map(b);
    return out;
}

double hermiticity_defect(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("hermiticity_defect: matrix is not square");
    }
    double d = 0;
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = r; c < m.cols(); c++) {
            d = std::max(d, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return d;
}

double unitarity_defect(const ComplexMatrix &u) {
    return (u.adjoint() * u - ComplexMatrix::identity(u.cols())).max_abs();
}

double spectral_norm(const ComplexMatrix &m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    return svd.singularValues()(0);
}

ComplexMatrix matrix_power(const ComplexMatrix &m, size_t k) {
    if (!m.is_square()) {
        throw std::invalid_argument("matrix_power: matrix is not square");
    }
    ComplexMatrix result = ComplexMatrix::identity(m.rows());
    ComplexMatrix base = m;
    while (k > 0) {
        if (k & 1) {
            result = result * base;
        }
        k >>= 1;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

HermitianEig hermitian_eig(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument(
            "hermitian_eig: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
            ", not square");
    }
    double defect = hermiticity_defect(m);
    if (defect > tol::kHermitianInput) {
        throw std::invalid_argument("hermitian_eig: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eig: eigensolver did not converge");
    }
    size_t n = m.rows();
    HermitianEig out{std::vector<double>(n), ComplexMatrix(n, n)};
    const auto &values = solver.eigenvalues();
    const auto &vectors = solver.eigenvectors();
    for (size_t j = 0; j < n; j++) {
        out.eigenvalues[j] = values(j);
        for (size_t i = 0; i < n; i++) {
            out.eigenvectors(i, j) = vectors(i, j);
        }
    }
    return out;
}

ComplexMatrix expm_i_hermitian(const ComplexMatrix &h, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("expm_i_hermitian: sign must be +1 or -1");
    }
    HermitianEig eig = hermitian_eig(h);
    size_t n = h.rows();
    const ComplexMatrix &q = eig.eigenvectors;
    std::vector<Complex> phases(n);
    for (size_t j = 0; j < n; j++) {
        phases[j] = std::polar(1.0, sign * eig.eigenvalues[j]);
    }
    ComplexMatrix out(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            Complex acc = 0;
            for (size_t j = 0; j < n; j++) {
                acc += q(r, j) * phases[j] * std::conj(q(c, j));
            }
            out(r, c) = acc;
        }
    }
    return out;
}

StateVector expm_i_hermitian_apply(const ComplexMatrix &h, int sign, const StateVector &v) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("expm_i_hermitian_apply: sign must be +1 or -1");
    }
    if (!h.is_square()) {
        throw std::invalid_argument("expm_i_hermitian_apply: matrix is not square");
    }
    require_same_dim(h.cols(), v.dim(), "expm_i_hermitian_apply");

    // The max row sum bounds the spectral norm of a Hermitian matrix.
    double bound = 0;
    for (size_t r = 0; r < h.rows(); r++) {
        double row_sum = 0;
        for (const Complex &z : h.row(r)) {
            row_sum += std::abs(z.real()) + std::abs(z.imag());
        }
        bound = std::max(bound, row_sum);
    }
    size_t substeps = std::max<size_t>(1, static_cast<size_t>(std::ceil(bound)));
    Complex factor(0, sign / static_cast<double>(substeps));

    StateVector state = v;
    StateVector term(v.dim());
    for (size_t s = 0; s < substeps; s++) {
        term = state;
        double scale = state.norm();
        for (int k = 1; k < 64; k++) {
            term = apply(h, term);
            term *= factor / static_cast<double>(k);
            state += term;
            if (term.norm() <= 1e-18 * scale) {
                break;
            }
        }
    }
    return state;
}

StateVector apply(const ComplexMatrix &m, const StateVector &v) {
    require_same_dim(m.cols(), v.dim(), "apply");
    StateVector out(m.rows());
    if (m.rows() == 0) {
        return out;
    }
    MutableVectorMap(out.amplitudes().data(), static_cast<Eigen::Index>(out.dim())).noalias() =
        map(m) * VectorMap(v.amplitudes().data(), static_cast<Eigen::Index>(v.dim()));
    return out;
}

Complex overlap(const StateVector &u, const StateVector &v) {
    require_same_dim(u.dim(), v.dim(), "overlap");
    Complex acc = 0;
    for (size_t i = 0; i < u.dim(); i++) {
        acc += std::conj(u[i]) * v[i];
    }
    return acc;
}

}  // namespace gaugedrift
