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

#ifndef GAUGEDRIFT_FINITE_GROUP_H
#define GAUGEDRIFT_FINITE_GROUP_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gaugedrift/rng.h"

namespace gaugedrift {

/// An element of a FiniteGroup, identified by its row in the Cayley table.
struct GroupElement {
    uint32_t index = 0;

    friend auto operator<=>(const GroupElement &, const GroupElement &) = default;
};

/// A finite group stored as an explicit Cayley table.
///
/// The constructor verifies closure, associativity, identity and inverses,
/// so every FiniteGroup value satisfies the group axioms. Values are
/// immutable and may be shared across threads.
class FiniteGroup {
   public:
    /// `mul_table[a][b]` is the index of a*b. Throws std::invalid_argument
    /// if the table is not a group.
    FiniteGroup(std::string name, std::vector<std::vector<uint32_t>> mul_table);

    size_t order() const {
        return order_;
    }
    const std::string &name() const {
        return name_;
    }
    GroupElement identity() const {
        return GroupElement{identity_};
    }

    GroupElement mul(GroupElement a, GroupElement b) const {
        return GroupElement{table_[a.index * order_ + b.index]};
    }
    GroupElement inv(GroupElement a) const {
        return GroupElement{inverse_[a.index]};
    }
    GroupElement pow(GroupElement g, size_t k) const;

    bool contains(GroupElement g) const {
        return g.index < order_;
    }
    void check_element(GroupElement g) const;

    bool is_abelian() const;

    /// Number of conjugacy classes.
    size_t num_conjugacy_classes() const;

    /// Subgroup generated by `generators`, as a sorted list of elements.
    std::vector<GroupElement> generated_subgroup(const std::vector<GroupElement> &generators) const;

    /// Raw table in row-major order.
    const std::vector<uint32_t> &mul_table() const {
        return table_;
    }
    const std::vector<uint32_t> &inv_table() const {
        return inverse_;
    }

   private:
    std::string name_;
    size_t order_;
    uint32_t identity_;
    std::vector<uint32_t> table_;
    std::vector<uint32_t> inverse_;
};

/// Z_n with (i, j) -> (i + j) mod n.
FiniteGroup make_cyclic(size_t n);

/// D_n of order 2n. Indices 0..n-1 are rotations r^k, indices n..2n-1 are
/// reflections s*r^k, with s r s = r^-1.
FiniteGroup make_dihedral(size_t n);

/// Parses `z<n>` or `d<n>`.
FiniteGroup group_from_name(std::string_view name);

/// Smallest k >= 1 with g^k = e.
size_t element_order(const FiniteGroup &group, GroupElement g);

/// Haar-distributed (uniform) element.
GroupElement sample_uniform(const FiniteGroup &group, Rng &rng);

/// Samples products of a fixed number of generators, each chosen uniformly
/// from the generator list. Construction fails unless the generators
/// generate the whole group.
class WordSampler {
   public:
    WordSampler(const FiniteGroup &group, std::vector<GroupElement> generators, size_t word_length);

    GroupElement sample(Rng &rng) const;

    /// Exact output distribution of sample(), indexed by element.
    std::vector<double> distribution() const;

    const FiniteGroup &group() const {
        return group_;
    }
    const std::vector<GroupElement> &generators() const {
        return generators_;
    }
    size_t word_length() const {
        return word_length_;
    }

   private:
    FiniteGroup group_;
    std::vector<GroupElement> generators_;
    size_t word_length_;
};

GroupElement sample_word(const WordSampler &sampler, Rng &rng);
std::vector<double> word_distribution(const WordSampler &sampler);

/// Total-variation distance between a distribution over the group and the
/// uniform distribution.
double tv_distance_to_uniform(const std::vector<double> &distribution);

}  // namespace gaugedrift

#endif
