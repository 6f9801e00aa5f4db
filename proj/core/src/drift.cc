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

#include "gaugedrift/drift.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gaugedrift {

std::string_view to_string(DriftSampling sampling) {
    switch (sampling) {
        case DriftSampling::kPerExperiment:
            return "per_experiment";
        case DriftSampling::kPerTrajectory:
            return "per_trajectory";
        case DriftSampling::kPerStep:
            return "per_step";
    }
    return "?";
}

DriftSampling drift_sampling_from_string(std::string_view name) {
    if (name == "per_experiment") {
        return DriftSampling::kPerExperiment;
    }
    if (name == "per_trajectory") {
        return DriftSampling::kPerTrajectory;
    }
    if (name == "per_step") {
        return DriftSampling::kPerStep;
    }
    throw std::invalid_argument(
        "unknown drift sampling '" + std::string(name) + "' (expected per_experiment, per_trajectory or per_step)");
}

void DriftSpec::validate() const {
    if (const auto *z2 = std::get_if<Z2RotationDrift>(&kind)) {
        if (!(z2->epsilon >= 0 && z2->epsilon <= 1)) {
            throw std::invalid_argument("drift epsilon must lie in [0, 1]");
        }
    } else {
        const auto &rh = std::get<RandomHermitianDrift>(kind);
        if (!(rh.amplitude > 0) || !std::isfinite(rh.amplitude)) {
            throw std::invalid_argument("drift amplitude must be positive");
        }
    }
}

ComplexMatrix z2_rotation_drift(double epsilon) {
    if (!(epsilon >= 0 && epsilon <= 1)) {
        throw std::invalid_argument("z2_rotation_drift: epsilon must lie in [0, 1]");
    }
    double c = std::sqrt(1 - epsilon * epsilon);
    double h = 1 / std::sqrt(2.0);
    StateVector zero_plus(std::vector<Complex>{h, 0, 0, h});
    StateVector zero_minus(std::vector<Complex>{h, 0, 0, -h});

    ComplexMatrix u = ComplexMatrix::identity(4);
    u += (c - 1) * ComplexMatrix::outer(zero_plus, zero_plus);
    u += (c - 1) * ComplexMatrix::outer(zero_minus, zero_minus);
    u += epsilon * ComplexMatrix::outer(zero_minus, zero_plus);
    u -= epsilon * ComplexMatrix::outer(zero_plus, zero_minus);
    return u;
}

ComplexMatrix random_drift_generator(const GaugeProjector &projector, double amplitude, Rng &rng) {
    if (!(amplitude > 0)) {
        throw std::invalid_argument("random drift amplitude must be positive");
    }
    size_t n = projector.dim();
    ComplexMatrix m(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            double re = rng.uniform(-amplitude, amplitude);
            double im = rng.uniform(-amplitude, amplitude);
            m(r, c) = Complex(re, im);
        }
    }
    ComplexMatrix h(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }

    // PHP = B (B^dagger H B) B^dagger for the orthonormal physical basis B.
    const auto &basis = projector.basis();
    size_t p = basis.size();
    std::vector<StateVector> hb;
    hb.reserve(p);
    for (const StateVector &b : basis) {
        hb.push_back(apply(h, b));
    }
    std::vector<Complex> core(p * p);
    for (size_t k = 0; k < p; k++) {
        for (size_t l = 0; l < p; l++) {
            core[k * p + l] = overlap(basis[k], hb[l]);
        }
    }
    // W = B core, then PHP = W B^dagger.
    std::vector<Complex> w(n * p);
    for (size_t r = 0; r < n; r++) {
        for (size_t l = 0; l < p; l++) {
            Complex acc = 0;
            for (size_t k = 0; k < p; k++) {
                acc += basis[k][r] * core[k * p + l];
            }
            w[r * p + l] = acc;
        }
    }
    for (size_t r = 0; r < n; r++) {
        for (size_t c = r; c < n; c++) {
            Complex php = 0;
            for (size_t l = 0; l < p; l++) {
                php += w[r * p + l] * std::conj(basis[l][c]);
            }
            h(r, c) -= php;
        }
    }
    for (size_t r = 0; r < n; r++) {
        h(r, r) = h(r, r).real();
        for (size_t c = 0; c < r; c++) {
            h(r, c) = std::conj(h(c, r));
        }
    }
    return h;
}

ComplexMatrix random_drift(const GaugeProjector &projector, double amplitude, Rng &rng) {
    return expm_i_hermitian(random_drift_generator(projector, amplitude, rng), -1);
}

ComplexMatrix random_drift(const GaugeProjector &projector, double amplitude, uint64_t seed) {
    Rng rng(seed);
    return random_drift(projector, amplitude, rng);
}

BlockDecomposition block_decompose(const ComplexMatrix &u, const GaugeProjector &projector) {
    if (!u.is_square() || u.rows() != projector.dim()) {
        throw std::invalid_argument(
            "block_decompose: operator is " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
            ", projector dimension is " + std::to_string(projector.dim()));
    }
    const ComplexMatrix &p = projector.matrix();
    ComplexMatrix q = ComplexMatrix::identity(p.rows()) - p;
    BlockDecomposition out;
    out.block_diagonal = p * u * p + q * u * q;
    out.off_block = u - out.block_diagonal;
    out.epsilon_est = spectral_norm(out.off_block);
    return out;
}

std::vector<ComplexMatrix> first_appearance_expansion(const ComplexMatrix &u, const GaugeProjector &projector, size_t n) {
    if (n > 12) {
        throw std::invalid_argument("first_appearance_expansion is limited to n <= 12");
    }
    BlockDecomposition parts = block_decompose(u, projector);
    size_t dim = u.rows();

    std::vector<ComplexMatrix> u_powers{ComplexMatrix::identity(dim)};
    std::vector<ComplexMatrix> a_powers{ComplexMatrix::identity(dim)};
    for (size_t k = 1; k <= n; k++) {
        u_powers.push_back(u_powers.back() * u);
        a_powers.push_back(a_powers.back() * parts.block_diagonal);
    }

    std::vector<ComplexMatrix> terms;
    terms.reserve(n + 1);
    for (size_t k = 0; k < n; k++) {
        terms.push_back(a_powers[k] * parts.off_block * u_powers[n - 1 - k]);
    }
    terms.push_back(a_powers[n]);
    return terms;
}

}  // namespace gaugedrift
