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

#include "gaugedrift/finite_group.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace gaugedrift;

namespace {

GroupElement e(uint32_t i) {
    return GroupElement{i};
}

std::vector<FiniteGroup> small_groups() {
    std::vector<FiniteGroup> out;
    for (size_t n = 1; n <= 12; n++) {
        out.push_back(make_cyclic(n));
    }
    for (size_t n = 1; n <= 6; n++) {
        out.push_back(make_dihedral(n));
    }
    return out;
}

}  // namespace

TEST(finite_group, cyclic_tables) {
    auto z2 = make_cyclic(2);
    EXPECT_EQ(z2.order(), 2u);
    EXPECT_EQ(z2.name(), "z2");
    EXPECT_EQ(element_order(z2, e(1)), 2u);

    auto z1 = make_cyclic(1);
    EXPECT_EQ(z1.order(), 1u);
    EXPECT_EQ(z1.identity(), e(0));

    auto z4 = make_cyclic(4);
    EXPECT_EQ(element_order(z4, e(1)), 4u);
    EXPECT_EQ(element_order(z4, e(2)), 2u);
    EXPECT_EQ(z4.mul(e(3), e(2)), e(1));

    EXPECT_THROW(make_cyclic(0), std::invalid_argument);
}

TEST(finite_group, dihedral_three) {
    auto d3 = make_dihedral(3);
    EXPECT_EQ(d3.order(), 6u);
    EXPECT_FALSE(d3.is_abelian());

    std::vector<size_t> orders;
    for (uint32_t i = 0; i < 6; i++) {
        orders.push_back(element_order(d3, e(i)));
    }
    EXPECT_EQ(orders, (std::vector<size_t>{1, 3, 3, 2, 2, 2}));

    // s r s = r^-1 with r = 1, s = 3.
    GroupElement r = e(1), s = e(3);
    EXPECT_EQ(d3.mul(d3.mul(s, r), s), d3.inv(r));
    // Index n + k is s r^k.
    EXPECT_EQ(d3.mul(s, d3.pow(r, 2)), e(5));
    EXPECT_EQ(d3.num_conjugacy_classes(), 3u);

    EXPECT_THROW(make_dihedral(0), std::invalid_argument);
}

TEST(finite_group, dihedral_one_is_z2) {
    auto d1 = make_dihedral(1);
    auto z2 = make_cyclic(2);
    EXPECT_EQ(d1.order(), 2u);
    // Same table under the identity relabeling.
    EXPECT_EQ(d1.mul_table(), z2.mul_table());
}

TEST(finite_group, axioms_exhaustive) {
    for (const auto &g : small_groups()) {
        SCOPED_TRACE(g.name());
        size_t n = g.order();
        for (uint32_t a = 0; a < n; a++) {
            EXPECT_EQ(g.mul(g.identity(), e(a)), e(a));
            EXPECT_EQ(g.mul(e(a), g.inv(e(a))), g.identity());
            for (uint32_t b = 0; b < n; b++) {
                GroupElement ab = g.mul(e(a), e(b));
                ASSERT_LT(ab.index, n);
                EXPECT_EQ(g.inv(ab), g.mul(g.inv(e(b)), g.inv(e(a))));
                for (uint32_t c = 0; c < n; c++) {
                    EXPECT_EQ(g.mul(ab, e(c)), g.mul(e(a), g.mul(e(b), e(c))));
                }
            }
        }
        EXPECT_EQ(g.num_conjugacy_classes(), oracle::count_conjugacy_classes(g));
    }
}

TEST(finite_group, rejects_non_groups) {
    // Not associative: a 3-element quasigroup (subtraction mod 3).
    std::vector<std::vector<uint32_t>> sub{{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    EXPECT_THROW(FiniteGroup("sub3", sub), std::invalid_argument);
    EXPECT_THROW(FiniteGroup("open", {{0, 2}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(FiniteGroup("ragged", {{0, 1}, {1}}), std::invalid_argument);
    EXPECT_THROW(FiniteGroup("empty", {}), std::invalid_argument);
}

TEST(finite_group, from_name) {
    EXPECT_EQ(group_from_name("z2").order(), 2u);
    EXPECT_EQ(group_from_name("d3").order(), 6u);
    EXPECT_EQ(group_from_name("z12").order(), 12u);
    EXPECT_THROW(group_from_name("q8"), std::invalid_argument);
    EXPECT_THROW(group_from_name("z"), std::invalid_argument);
    EXPECT_THROW(group_from_name("z0"), std::invalid_argument);
    EXPECT_THROW(group_from_name("d3x"), std::invalid_argument);
}

TEST(finite_group, element_order_identity) {
    for (const auto &g : small_groups()) {
        EXPECT_EQ(element_order(g, g.identity()), 1u);
    }
    EXPECT_THROW(element_order(make_cyclic(3), e(3)), std::out_of_range);
}

TEST(finite_group, sample_uniform_frequencies) {
    auto z2 = make_cyclic(2);
    Rng rng(12345);
    size_t ones = 0;
    const size_t draws = 100000;
    for (size_t i = 0; i < draws; i++) {
        ones += sample_uniform(z2, rng).index;
    }
    EXPECT_NEAR(static_cast<double>(ones) / draws, 0.5, 0.01);

    auto trivial = make_cyclic(1);
    for (int i = 0; i < 100; i++) {
        EXPECT_EQ(sample_uniform(trivial, rng), trivial.identity());
    }
}

TEST(finite_group, sample_uniform_chi_squared) {
    // 0.999 quantiles of chi^2 with k degrees of freedom.
    const std::map<size_t, double> q999{{1, 10.828}, {2, 13.816}, {3, 16.266}, {5, 20.515}, {7, 24.322}, {11, 31.264}};
    for (auto g : {make_cyclic(2), make_cyclic(3), make_cyclic(4), make_dihedral(3), make_dihedral(4), make_cyclic(12)}) {
        SCOPED_TRACE(g.name());
        for (uint64_t seed : {0u, 1u, 2u}) {
            Rng rng(seed);
            std::vector<double> counts(g.order(), 0);
            const size_t draws = 100000;
            for (size_t i = 0; i < draws; i++) {
                counts[sample_uniform(g, rng).index]++;
            }
            double expected = static_cast<double>(draws) / g.order();
            double chi2 = 0;
            for (double c : counts) {
                chi2 += (c - expected) * (c - expected) / expected;
            }
            EXPECT_LT(chi2, q999.at(g.order() - 1));
        }
    }
}

TEST(finite_group, sample_uniform_golden_sequence) {
    auto d3 = make_dihedral(3);
    Rng rng(2020);
    std::vector<uint32_t> got;
    for (int i = 0; i < 5; i++) {
        got.push_back(sample_uniform(d3, rng).index);
    }
    EXPECT_EQ(got, (std::vector<uint32_t>{2, 5, 2, 3, 1}));
}

TEST(finite_group, word_sampler_basics) {
    auto d3 = make_dihedral(3);
    Rng rng(1);
    WordSampler empty_word(d3, {e(1), e(3)}, 0);
    EXPECT_EQ(empty_word.sample(rng), d3.identity());
    auto delta = word_distribution(empty_word);
    EXPECT_EQ(delta[0], 1.0);

    auto z2 = make_cyclic(2);
    WordSampler flip(z2, {e(1)}, 1);
    for (int i = 0; i < 20; i++) {
        EXPECT_EQ(sample_word(flip, rng), e(1));
    }

    // Rotations alone only generate Z3 inside D3.
    EXPECT_THROW(WordSampler(d3, {e(1), e(2)}, 5), std::invalid_argument);
    EXPECT_THROW(WordSampler(d3, {}, 5), std::invalid_argument);
    EXPECT_THROW(WordSampler(d3, {e(6)}, 5), std::out_of_range);
}

TEST(finite_group, word_distribution_matches_enumeration) {
    auto d3 = make_dihedral(3);
    std::vector<GroupElement> gens{e(1), e(3)};
    for (size_t len : {0u, 1u, 2u, 5u, 12u, 20u}) {
        SCOPED_TRACE(len);
        auto exact = word_distribution(WordSampler(d3, gens, len));
        auto brute = oracle::enumerate_word_distribution(d3, gens, len);
        for (size_t i = 0; i < 6; i++) {
            EXPECT_NEAR(exact[i], brute[i], 1e-14);
        }
    }
    auto at20 = word_distribution(WordSampler(d3, gens, 20));
    EXPECT_LT(tv_distance_to_uniform(at20), 0.01);
}

TEST(finite_group, word_distribution_converges_monotonically) {
    struct Case {
        FiniteGroup g;
        std::vector<GroupElement> gens;
    };
    std::vector<Case> cases{
        {make_dihedral(3), {e(1), e(3)}},
        {make_dihedral(3), {e(2), e(4)}},
        {make_dihedral(4), {e(1), e(4), e(5)}},
        {make_cyclic(5), {e(1), e(2)}},
    };
    for (const auto &c : cases) {
        SCOPED_TRACE(c.g.name());
        double prev = 1.0;
        double last_ratio = 1.0;
        for (size_t len = 0; len <= 30; len++) {
            double tv = tv_distance_to_uniform(word_distribution(WordSampler(c.g, c.gens, len)));
            EXPECT_LE(tv, prev + 1e-15);
            if (prev > 1e-12) {
                last_ratio = tv / prev;
            }
            prev = tv;
        }
        EXPECT_LT(last_ratio, 1.0);
    }
    auto long_word = word_distribution(WordSampler(make_dihedral(3), {e(1), e(3)}, 200));
    for (double p : long_word) {
        EXPECT_NEAR(p, 1.0 / 6, 1e-12);
    }
}

TEST(finite_group, word_sampler_empirical_matches_exact) {
    auto d3 = make_dihedral(3);
    WordSampler sampler(d3, {e(1), e(3)}, 3);
    auto exact = sampler.distribution();
    Rng rng(99);
    std::vector<double> counts(6, 0);
    const size_t draws = 60000;
    for (size_t i = 0; i < draws; i++) {
        counts[sampler.sample(rng).index]++;
    }
    for (size_t i = 0; i < 6; i++) {
        EXPECT_NEAR(counts[i] / draws, exact[i], 0.01);
    }
}
