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

#include "gaugedrift/lattice.h"

#include <cmath>

#include "gaugedrift/tolerances.h"
#include "gtest/gtest.h"
#include "oracles.h"

using namespace gaugedrift;

namespace {

GroupElement e(uint32_t i) {
    return GroupElement{i};
}

StateVector z2_state(double c00, double c01, double c10, double c11) {
    return StateVector(std::vector<Complex>{c00, c01, c10, c11});
}

// Up-to-phase equality of two unit vectors.
bool same_ray(const StateVector &a, const StateVector &b, double tolerance) {
    return std::abs(std::abs(overlap(a, b)) - 1) < tolerance;
}

}  // namespace

TEST(lattice, basis_index_is_mixed_radix) {
    auto model = LatticeModel::two_link_plaquette(make_dihedral(3));
    EXPECT_EQ(model.dim(), 36u);
    std::vector<GroupElement> c{e(2), e(5)};
    EXPECT_EQ(model.basis_index(c), 2u * 6 + 5);
    EXPECT_EQ(model.config_of(17), c);
    for (size_t i = 0; i < model.dim(); i++) {
        EXPECT_EQ(model.basis_index(model.config_of(i)), i);
    }
    std::vector<GroupElement> bad{e(6), e(0)};
    EXPECT_THROW(model.basis_index(bad), std::out_of_range);
    std::vector<GroupElement> short_config{e(0)};
    EXPECT_THROW(model.basis_index(short_config), std::invalid_argument);
}

TEST(lattice, model_validation) {
    EXPECT_THROW(LatticeModel(make_cyclic(2), 2, {{0, 2}}), std::invalid_argument);
    EXPECT_THROW(LatticeModel(make_dihedral(3), 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}), std::length_error);
    EXPECT_NO_THROW(LatticeModel(make_cyclic(2), 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
}

TEST(lattice, transform_from_index_site0_most_significant) {
    auto model = LatticeModel::two_link_plaquette(make_dihedral(3));
    EXPECT_EQ(num_transforms(model), 36u);
    EXPECT_EQ(transform_from_index(model, 0).site_elements, (std::vector<GroupElement>{e(0), e(0)}));
    EXPECT_EQ(transform_from_index(model, 13).site_elements, (std::vector<GroupElement>{e(2), e(1)}));
}

TEST(lattice, gauge_action_on_links) {
    auto g = make_dihedral(3);
    auto model = LatticeModel::two_link_plaquette(g);
    GaugeTransform t{{e(1), e(3)}};
    auto perm = gauge_permutation(model, t);
    for (size_t i = 0; i < model.dim(); i++) {
        auto before = model.config_of(i);
        auto after = model.config_of(perm[i]);
        // Link a: 0 -> 1, link b: 1 -> 0.
        EXPECT_EQ(after[0], g.mul(g.mul(e(1), before[0]), g.inv(e(3))));
        EXPECT_EQ(after[1], g.mul(g.mul(e(3), before[1]), g.inv(e(1))));
    }
}

TEST(lattice, gauge_operator_is_homomorphism) {
    for (const auto &group : {make_cyclic(2), make_dihedral(3)}) {
        auto model = LatticeModel::two_link_plaquette(group);
        size_t n = num_transforms(model);
        std::vector<ComplexMatrix> ops;
        for (size_t i = 0; i < n; i++) {
            ops.push_back(gauge_operator(model, transform_from_index(model, i)));
            EXPECT_LT(unitarity_defect(ops.back()), tol::kOperator);
        }
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < n; j++) {
                auto ti = transform_from_index(model, i);
                auto tj = transform_from_index(model, j);
                auto composed = gauge_operator(model, compose(model, ti, tj));
                ASSERT_EQ(composed, oracle::naive_mul(ops[i], ops[j])) << group.name() << " " << i << " " << j;
            }
        }
        EXPECT_EQ(ops[0], ComplexMatrix::identity(model.dim()));
    }
}

TEST(lattice, permutation_fast_path_matches_dense) {
    auto model = LatticeModel::two_link_plaquette(make_dihedral(3));
    Rng rng(5);
    StateVector v(model.dim());
    for (size_t i = 0; i < v.dim(); i++) {
        v[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    }
    StateVector scratch;
    for (size_t k = 0; k < num_transforms(model); k++) {
        auto t = transform_from_index(model, k);
        auto perm = gauge_permutation(model, t);
        auto dense = apply(gauge_operator(model, t), v);
        EXPECT_EQ(perm.apply(v), dense);
        StateVector w = v;
        perm.apply_in_place(w, scratch);
        EXPECT_EQ(w, dense);
        EXPECT_EQ(perm.to_matrix(), gauge_operator(model, t));
        EXPECT_EQ(perm.is_identity(), perm == Permutation::identity(model.dim()));
    }
}

TEST(lattice, z2_physical_subspace) {
    auto model = LatticeModel::two_link_plaquette(make_cyclic(2));
    auto p = build_projector(model);
    ASSERT_EQ(p.physical_dim(), 2u);
    double h = 1 / std::sqrt(2.0);
    auto zero_plus = z2_state(h, 0, 0, h);
    auto one_plus = z2_state(0, h, h, 0);
    EXPECT_TRUE(same_ray(p.basis()[0], zero_plus, 1e-12));
    EXPECT_TRUE(same_ray(p.basis()[1], one_plus, 1e-12));

    ComplexMatrix expected = ComplexMatrix::outer(zero_plus, zero_plus) + ComplexMatrix::outer(one_plus, one_plus);
    EXPECT_LT((p.matrix() - expected).max_abs(), 1e-15);

    EXPECT_NEAR(unphysical_weight(p, zero_plus), 0, 1e-15);
    EXPECT_NEAR(unphysical_weight(p, z2_state(h, 0, 0, -h)), 1, 1e-15);
    EXPECT_NEAR(unphysical_weight(p, z2_state(1, 0, 0, 0)), 0.5, 1e-15);
}

TEST(lattice, projector_properties_exhaustive) {
    for (const auto &group : {make_cyclic(2), make_cyclic(3), make_cyclic(4), make_dihedral(3)}) {
        SCOPED_TRACE(group.name());
        auto model = LatticeModel::two_link_plaquette(group);
        auto p = build_projector(model);
        const auto &m = p.matrix();
        EXPECT_LT((oracle::naive_mul(m, m) - m).max_abs(), 1e-12);
        EXPECT_LT(hermiticity_defect(m), 1e-15);
        EXPECT_NEAR(m.trace().real(), static_cast<double>(p.physical_dim()), 1e-12);
        for (size_t k = 0; k < num_transforms(model); k++) {
            auto phi = gauge_operator(model, transform_from_index(model, k));
            auto commutator = oracle::naive_mul(m, phi) - oracle::naive_mul(phi, m);
            ASSERT_LT(commutator.max_abs(), 1e-12) << k;
        }
        // Basis is orthonormal, invariant, and spans the image.
        const auto &b = p.basis();
        for (size_t i = 0; i < b.size(); i++) {
            for (size_t j = 0; j < b.size(); j++) {
                EXPECT_NEAR(std::abs(overlap(b[i], b[j])), i == j ? 1.0 : 0.0, 1e-12);
            }
            EXPECT_LT((apply(m, b[i]) - b[i]).norm(), 1e-12);
        }
    }
}

TEST(lattice, physical_dim_matches_class_count_and_burnside) {
    for (const auto &group : {make_cyclic(2), make_cyclic(3), make_cyclic(4), make_dihedral(3), make_dihedral(4)}) {
        SCOPED_TRACE(group.name());
        auto model = LatticeModel::two_link_plaquette(group);
        auto p = build_projector(model);
        EXPECT_EQ(p.physical_dim(), oracle::count_conjugacy_classes(group));
        EXPECT_NEAR(static_cast<double>(p.physical_dim()), oracle::burnside_physical_dim(model), 1e-12);
    }
    EXPECT_EQ(build_projector(LatticeModel::two_link_plaquette(make_dihedral(3))).physical_dim(), 3u);
}

TEST(lattice, square_plaquette_physical_dim) {
    LatticeModel model(make_cyclic(2), 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto p = build_projector(model);
    EXPECT_NEAR(static_cast<double>(p.physical_dim()), oracle::burnside_physical_dim(model), 1e-12);
    EXPECT_EQ(p.physical_dim(), 2u);
}

TEST(lattice, project_matches_dense) {
    auto model = LatticeModel::two_link_plaquette(make_dihedral(3));
    auto p = build_projector(model);
    Rng rng(9);
    StateVector v(model.dim());
    for (size_t i = 0; i < v.dim(); i++) {
        v[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    }
    EXPECT_LT((p.project(v) - apply(p.matrix(), v)).norm(), 1e-12);
    EXPECT_NEAR(p.physical_weight(v), apply(p.matrix(), v).norm_squared(), 1e-12);
}

TEST(lattice, physical_basis_rejects_non_projector) {
    EXPECT_THROW(physical_basis(ComplexMatrix(2, 2, {0.5, 0, 0, 1})), std::runtime_error);
}

TEST(lattice, z2_hamiltonian_matrix) {
    auto h = z2_two_link_hamiltonian();
    ComplexMatrix expected(4, 4, {1, 1, 1, 0, 1, -1, 0, 1, 1, 0, -1, 1, 0, 1, 1, 1});
    EXPECT_EQ(h, expected);
    EXPECT_EQ(hermiticity_defect(h), 0);
    auto p = build_projector(LatticeModel::two_link_plaquette(make_cyclic(2)));
    EXPECT_LT((h * p.matrix() - p.matrix() * h).max_abs(), 1e-15);
}

TEST(lattice, sample_transform_is_uniform) {
    auto model = LatticeModel::two_link_plaquette(make_cyclic(3));
    Rng rng(1);
    std::vector<int> counts(num_transforms(model), 0);
    const int draws = 90000;
    for (int i = 0; i < draws; i++) {
        auto t = sample_transform(model, rng);
        counts[t.site_elements[0].index * 3 + t.site_elements[1].index]++;
    }
    for (int c : counts) {
        EXPECT_NEAR(c, draws / 9.0, 5 * std::sqrt(draws / 9.0));
    }
}
