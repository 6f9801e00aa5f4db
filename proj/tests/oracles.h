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

// Independent reference computations used as test oracles. Nothing here
// calls into the code paths it is used to check.

#ifndef GAUGEDRIFT_TESTS_ORACLES_H
#define GAUGEDRIFT_TESTS_ORACLES_H

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "gaugedrift/finite_group.h"
#include "gaugedrift/lattice.h"
#include "gaugedrift/linalg.h"

namespace gaugedrift::oracle {

inline ComplexMatrix naive_mul(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < b.cols(); c++) {
            Complex acc = 0;
            for (size_t k = 0; k < a.cols(); k++) {
                acc += a(r, k) * b(k, c);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

/// exp(sign i H) by scaling, a 30-term Taylor series, and squaring.
inline ComplexMatrix taylor_expm_i(const ComplexMatrix &h, int sign) {
    size_t n = h.rows();
    double norm1 = 0;
    for (size_t c = 0; c < n; c++) {
        double s = 0;
        for (size_t r = 0; r < n; r++) {
            s += std::abs(h(r, c));
        }
        norm1 = std::max(norm1, s);
    }
    int squarings = 0;
    while (norm1 > 0.5) {
        norm1 /= 2;
        squarings++;
    }
    ComplexMatrix x = (Complex(0, sign) / std::pow(2.0, squarings)) * h;
    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 30; k++) {
        term = (1.0 / k) * naive_mul(term, x);
        sum += term;
    }
    for (int s = 0; s < squarings; s++) {
        sum = naive_mul(sum, sum);
    }
    return sum;
}

/// Distribution of products of `length` generators, by enumerating every
/// word.
inline std::vector<double> enumerate_word_distribution(
    const FiniteGroup &g, const std::vector<GroupElement> &gens, size_t length) {
    std::vector<double> counts(g.order(), 0.0);
    size_t words = 1;
    for (size_t i = 0; i < length; i++) {
        words *= gens.size();
    }
    for (size_t w = 0; w < words; w++) {
        size_t rest = w;
        GroupElement x = g.identity();
        for (size_t i = 0; i < length; i++) {
            x = g.mul(x, gens[rest % gens.size()]);
            rest /= gens.size();
        }
        counts[x.index] += 1;
    }
    for (double &c : counts) {
        c /= static_cast<double>(words);
    }
    return counts;
}

/// dim of the invariant subspace = average number of fixed basis states
/// over all gauge transforms (Burnside).
inline double burnside_physical_dim(const LatticeModel &model) {
    const FiniteGroup &g = model.group();
    size_t v = model.num_sites();
    size_t transforms = 1;
    for (size_t i = 0; i < v; i++) {
        transforms *= g.order();
    }
    size_t fixed_total = 0;
    for (size_t t = 0; t < transforms; t++) {
        std::vector<GroupElement> site(v);
        size_t rest = t;
        for (size_t i = v; i-- > 0;) {
            site[i] = GroupElement{static_cast<uint32_t>(rest % g.order())};
            rest /= g.order();
        }
        for (size_t b = 0; b < model.dim(); b++) {
            auto config = model.config_of(b);
            bool fixed = true;
            for (size_t l = 0; l < config.size() && fixed; l++) {
                const Link &link = model.links()[l];
                GroupElement moved = g.mul(g.mul(site[link.tail], config[l]), g.inv(site[link.head]));
                fixed = moved == config[l];
            }
            fixed_total += fixed;
        }
    }
    return static_cast<double>(fixed_total) / static_cast<double>(transforms);
}

/// Conjugacy classes by brute force.
inline size_t count_conjugacy_classes(const FiniteGroup &g) {
    std::vector<int> label(g.order(), -1);
    int classes = 0;
    for (uint32_t a = 0; a < g.order(); a++) {
        if (label[a] >= 0) {
            continue;
        }
        for (uint32_t x = 0; x < g.order(); x++) {
            GroupElement c = g.mul(g.mul(GroupElement{x}, GroupElement{a}), g.inv(GroupElement{x}));
            label[c.index] = classes;
        }
        classes++;
    }
    return static_cast<size_t>(classes);
}

struct AncillaMeasurement {
    double fail_probability;
    StateVector pass_branch;  // unnormalized system state for ancilla |+>
};

/// Builds the joint state (|psi>|0> + |psi>|1>)/sqrt(2), applies the
/// controlled permutation as a dense 2d x 2d matrix, then projects the
/// ancilla onto |+> and |->.
inline AncillaMeasurement controlled_transform_measurement(const StateVector &psi, const ComplexMatrix &phi) {
    size_t d = psi.dim();
    // Joint index: ancilla * d + system.
    StateVector joint(2 * d);
    double s = 1 / std::sqrt(2.0);
    for (size_t i = 0; i < d; i++) {
        joint[i] = s * psi[i];
        joint[d + i] = s * psi[i];
    }
    ComplexMatrix controlled(2 * d, 2 * d);
    for (size_t i = 0; i < d; i++) {
        controlled(i, i) = 1.0;
        for (size_t j = 0; j < d; j++) {
            controlled(d + i, d + j) = phi(i, j);
        }
    }
    StateVector after(2 * d);
    for (size_t r = 0; r < 2 * d; r++) {
        for (size_t c = 0; c < 2 * d; c++) {
            after[r] += controlled(r, c) * joint[c];
        }
    }
    // Ancilla components along |+> and |->.
    StateVector plus(d), minus(d);
    for (size_t i = 0; i < d; i++) {
        plus[i] = s * (after[i] + after[d + i]);
        minus[i] = s * (after[i] - after[d + i]);
    }
    return AncillaMeasurement{minus.norm_squared(), plus};
}

}  // namespace gaugedrift::oracle

#endif
