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

#include "gaugedrift/tolerances.h"
#include "gtest/gtest.h"
#include "oracles.h"

using namespace gaugedrift;

namespace {

const double kH = 1 / std::sqrt(2.0);

StateVector zero_plus() {
    return StateVector(std::vector<Complex>{kH, 0, 0, kH});
}

StateVector zero_minus() {
    return StateVector(std::vector<Complex>{kH, 0, 0, -kH});
}

GaugeProjector z2_projector() {
    return build_projector(LatticeModel::two_link_plaquette(make_cyclic(2)));
}

GaugeProjector d3_projector() {
    return build_projector(LatticeModel::two_link_plaquette(make_dihedral(3)));
}

// Largest |<b_i| T |b_j>| over the physical basis.
double physical_sector_max(const ComplexMatrix &t, const GaugeProjector &p) {
    double best = 0;
    for (const auto &bi : p.basis()) {
        for (const auto &bj : p.basis()) {
            best = std::max(best, std::abs(overlap(bi, apply(t, bj))));
        }
    }
    return best;
}

}  // namespace

TEST(drift, z2_rotation_identity_at_zero) {
    EXPECT_LT((z2_rotation_drift(0) - ComplexMatrix::identity(4)).max_abs(), 1e-15);
}

TEST(drift, z2_rotation_is_unitary_and_rotates_plane) {
    for (double eps : {0.01, 0.1, 0.5, 1.0}) {
        SCOPED_TRACE(eps);
        auto u = z2_rotation_drift(eps);
        EXPECT_LT(unitarity_defect(u), 1e-14);
        auto moved = apply(u, zero_plus());
        EXPECT_NEAR(std::abs(overlap(zero_plus(), moved)), std::sqrt(1 - eps * eps), 1e-15);
        EXPECT_NEAR(overlap(zero_minus(), moved).real(), eps, 1e-15);
        // Identity on the holonomy-1 sector.
        EXPECT_EQ(apply(u, StateVector::basis(4, 1)), StateVector::basis(4, 1));
        EXPECT_EQ(apply(u, StateVector::basis(4, 2)), StateVector::basis(4, 2));
    }
    EXPECT_THROW(z2_rotation_drift(-0.1), std::invalid_argument);
    EXPECT_THROW(z2_rotation_drift(1.5), std::invalid_argument);
}

TEST(drift, z2_double_application_closed_form) {
    for (double eps : {0.01, 0.1, 0.5}) {
        SCOPED_TRACE(eps);
        auto u = z2_rotation_drift(eps);
        auto twice = apply(u, apply(u, zero_plus()));
        EXPECT_NEAR(overlap(zero_plus(), twice).real(), 1 - 2 * eps * eps, 1e-12);
        EXPECT_NEAR(overlap(zero_minus(), twice).real(), 2 * eps * std::sqrt(1 - eps * eps), 1e-12);
        EXPECT_NEAR(twice.norm(), 1, 1e-12);
    }
}

TEST(drift, z2_gauge_sandwich_cancels) {
    auto model = LatticeModel::two_link_plaquette(make_cyclic(2));
    for (size_t k = 1; k < num_transforms(model); k++) {
        auto phi = gauge_operator(model, transform_from_index(model, k));
        if (phi == ComplexMatrix::identity(4)) {
            continue;
        }
        for (double eps : {0.01, 0.1, 0.5}) {
            auto u = z2_rotation_drift(eps);
            auto out = apply(u, apply(phi, apply(u, zero_plus())));
            EXPECT_LT((out - zero_plus()).norm(), 1e-12) << eps;
            // Holds as an operator identity on the whole space.
            EXPECT_LT((u * phi * u - phi).max_abs(), 1e-12);
        }
    }
}

TEST(drift, random_drift_properties) {
    auto p = d3_projector();
    Rng gen_rng(3);
    auto h = random_drift_generator(p, 0.01, gen_rng);
    EXPECT_LT(hermiticity_defect(h), 1e-15);
    // No physical-to-physical part.
    EXPECT_LT((p.matrix() * h * p.matrix()).max_abs(), 1e-15);
    Rng rng(3);
    auto u = random_drift(p, 0.01, rng);
    EXPECT_LT(unitarity_defect(u), tol::kOperator);
    EXPECT_LT((u - oracle::taylor_expm_i(h, -1)).max_abs(), tol::kOperator);
    EXPECT_THROW(random_drift(p, 0, 1), std::invalid_argument);
}

TEST(drift, random_drift_same_seed_reproducible) {
    auto p = d3_projector();
    EXPECT_EQ(random_drift(p, 0.01, 42), random_drift(p, 0.01, 42));
    EXPECT_NE(random_drift(p, 0.01, 42), random_drift(p, 0.01, 43));
}

TEST(drift, random_drift_regression_fixture) {
    auto p = d3_projector();
    auto parts = block_decompose(random_drift(p, 0.01, 0), p);
    EXPECT_NEAR(parts.epsilon_est, 0.039050286341231123, 1e-12);
}

TEST(drift, block_decompose_identity_and_block_unitaries) {
    auto p = d3_projector();
    auto id = block_decompose(ComplexMatrix::identity(36), p);
    EXPECT_LT(id.epsilon_est, 1e-14);
    EXPECT_LT((id.block_diagonal - ComplexMatrix::identity(36)).max_abs(), 1e-15);

    auto model = LatticeModel::two_link_plaquette(make_dihedral(3));
    auto phi = gauge_operator(model, transform_from_index(model, 7));
    auto gauge = block_decompose(phi, p);
    EXPECT_LT(gauge.epsilon_est, 1e-12);

    EXPECT_THROW(block_decompose(ComplexMatrix::identity(4), p), std::invalid_argument);
}

TEST(drift, block_decompose_z2_rotation_recovers_epsilon) {
    auto p = z2_projector();
    for (double eps : {0.01, 0.1, 0.5}) {
        auto u = z2_rotation_drift(eps);
        auto parts = block_decompose(u, p);
        EXPECT_NEAR(parts.epsilon_est, eps, 1e-12);
        EXPECT_LT((parts.block_diagonal + parts.off_block - u).max_abs(), 1e-15);
        // Off-block part maps physical to unphysical and back.
        const auto &pm = p.matrix();
        ComplexMatrix q = ComplexMatrix::identity(4) - pm;
        EXPECT_LT((pm * parts.off_block * pm).max_abs(), 1e-15);
        EXPECT_LT((q * parts.off_block * q).max_abs(), 1e-15);
        EXPECT_LT((pm * parts.block_diagonal * q).max_abs(), 1e-15);
    }
}

TEST(drift, block_decompose_random_drift_reconstructs) {
    auto p = d3_projector();
    for (uint64_t seed = 0; seed < 4; seed++) {
        auto u = random_drift(p, 0.01, seed);
        auto parts = block_decompose(u, p);
        EXPECT_LT((parts.block_diagonal + parts.off_block - u).max_abs(), 1e-15);
        EXPECT_GT(parts.epsilon_est, 0);
        EXPECT_LT(parts.epsilon_est, 1);
    }
}

TEST(drift, first_appearance_expansion_sums_to_power) {
    auto zp = z2_projector();
    auto dp = d3_projector();
    std::vector<std::pair<ComplexMatrix, const GaugeProjector *>> cases{
        {z2_rotation_drift(0.1), &zp}, {z2_rotation_drift(0.5), &zp}, {random_drift(dp, 0.01, 0), &dp},
        {random_drift(dp, 0.05, 1), &dp}};
    for (const auto &[u, p] : cases) {
        double eps = block_decompose(u, *p).epsilon_est;
        for (size_t n = 1; n <= 5; n++) {
            auto terms = first_appearance_expansion(u, *p, n);
            ASSERT_EQ(terms.size(), n + 1);
            ComplexMatrix sum(u.rows(), u.cols());
            for (const auto &t : terms) {
                sum += t;
            }
            ComplexMatrix power = ComplexMatrix::identity(u.rows());
            for (size_t k = 0; k < n; k++) {
                power = oracle::naive_mul(power, u);
            }
            EXPECT_LT((sum - power).max_abs(), 1e-9);
            for (size_t k = 0; k < n; k++) {
                EXPECT_LE(physical_sector_max(terms[k], *p), eps + 1e-12);
            }
        }
    }
    EXPECT_THROW(first_appearance_expansion(z2_rotation_drift(0.1), zp, 13), std::invalid_argument);
}

TEST(drift, sampling_names_round_trip) {
    for (auto s : {DriftSampling::kPerExperiment, DriftSampling::kPerTrajectory, DriftSampling::kPerStep}) {
        EXPECT_EQ(drift_sampling_from_string(to_string(s)), s);
    }
    EXPECT_THROW(drift_sampling_from_string("sometimes"), std::invalid_argument);
}

TEST(drift, spec_validation) {
    DriftSpec spec{Z2RotationDrift{1.2}};
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    spec.kind = RandomHermitianDrift{-1, 0};
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    spec.kind = RandomHermitianDrift{0.01, 0};
    EXPECT_NO_THROW(spec.validate());
}
