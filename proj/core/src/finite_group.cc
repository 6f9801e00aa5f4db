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
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace gaugedrift {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<uint32_t>> mul_table)
    : name_(std::move(name)), order_(mul_table.size()), identity_(0) {
    if (order_ == 0) {
        throw std::invalid_argument("group '" + name_ + "' has an empty multiplication table");
    }
    table_.reserve(order_ * order_);
    for (const auto &row : mul_table) {
        if (row.size() != order_) {
            throw std::invalid_argument("group '" + name_ + "' multiplication table is not square");
        }
        for (uint32_t v : row) {
            if (v >= order_) {
                throw std::invalid_argument("group '" + name_ + "' is not closed: entry out of range");
            }
            table_.push_back(v);
        }
    }

    auto at = [&](size_t a, size_t b) {
        return table_[a * order_ + b];
    };

    bool found_identity = false;
    for (size_t e = 0; e < order_ && !found_identity; e++) {
        bool ok = true;
        for (size_t a = 0; a < order_ && ok; a++) {
            ok = at(e, a) == a && at(a, e) == a;
        }
        if (ok) {
            identity_ = static_cast<uint32_t>(e);
            found_identity = true;
        }
    }
    if (!found_identity) {
        throw std::invalid_argument("group '" + name_ + "' has no identity element");
    }

    inverse_.assign(order_, UINT32_MAX);
    for (size_t a = 0; a < order_; a++) {
        for (size_t b = 0; b < order_; b++) {
            if (at(a, b) == identity_ && at(b, a) == identity_) {
                inverse_[a] = static_cast<uint32_t>(b);
                break;
            }
        }
        if (inverse_[a] == UINT32_MAX) {
            throw std::invalid_argument("group '" + name_ + "': element without inverse");
        }
    }

    for (size_t a = 0; a < order_; a++) {
        for (size_t b = 0; b < order_; b++) {
            for (size_t c = 0; c < order_; c++) {
                if (at(at(a, b), c) != at(a, at(b, c))) {
                    throw std::invalid_argument("group '" + name_ + "' is not associative");
                }
            }
        }
    }
}

void FiniteGroup::check_element(GroupElement g) const {
    if (!contains(g)) {
        throw std::out_of_range(
            "element index " + std::to_string(g.index) + " out of range for group '" + name_ + "' of order " +
            std::to_string(order_));
    }
}

GroupElement FiniteGroup::pow(GroupElement g, size_t k) const {
    GroupElement result = identity();
    for (size_t i = 0; i < k; i++) {
        result = mul(result, g);
    }
    return result;
}

bool FiniteGroup::is_abelian() const {
    for (size_t a = 0; a < order_; a++) {
        for (size_t b = a + 1; b < order_; b++) {
            if (table_[a * order_ + b] != table_[b * order_ + a]) {
                return false;
            }
        }
    }
    return true;
}

size_t FiniteGroup::num_conjugacy_classes() const {
    std::vector<bool> seen(order_, false);
    size_t classes = 0;
    for (uint32_t a = 0; a < order_; a++) {
        if (seen[a]) {
            continue;
        }
        classes++;
        for (uint32_t g = 0; g < order_; g++) {
            GroupElement c = mul(mul(GroupElement{g}, GroupElement{a}), inv(GroupElement{g}));
            seen[c.index] = true;
        }
    }
    return classes;
}

std::vector<GroupElement> FiniteGroup::generated_subgroup(const std::vector<GroupElement> &generators) const {
    std::vector<bool> member(order_, false);
    std::vector<GroupElement> frontier{identity()};
    member[identity_] = true;
    while (!frontier.empty()) {
        GroupElement x = frontier.back();
        frontier.pop_back();
        for (GroupElement g : generators) {
            check_element(g);
            GroupElement y = mul(x, g);
            if (!member[y.index]) {
                member[y.index] = true;
                frontier.push_back(y);
            }
        }
    }
    std::vector<GroupElement> out;
    for (uint32_t i = 0; i < order_; i++) {
        if (member[i]) {
            out.push_back(GroupElement{i});
        }
    }
    return out;
}

FiniteGroup make_cyclic(size_t n) {
    if (n == 0) {
        throw std::invalid_argument("cyclic group order must be at least 1");
    }
    std::vector<std::vector<uint32_t>> table(n, std::vector<uint32_t>(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            table[i][j] = static_cast<uint32_t>((i + j) % n);
        }
    }
    return FiniteGroup("z" + std::to_string(n), std::move(table));
}

FiniteGroup make_dihedral(size_t n) {
    if (n == 0) {
        throw std::invalid_argument("dihedral group parameter must be at least 1");
    }
    // Element index a*n + k represents s^a r^k. Using r^k s = s r^-k:
    // (s^a r^i)(s^b r^j) = s^(a+b) r^((-1)^b i + j).
    size_t order = 2 * n;
    std::vector<std::vector<uint32_t>> table(order, std::vector<uint32_t>(order));
    for (size_t x = 0; x < order; x++) {
        size_t a = x / n, i = x % n;
        for (size_t y = 0; y < order; y++) {
            size_t b = y / n, j = y % n;
            size_t rot_i = b ? (n - i) % n : i;
            size_t k = (rot_i + j) % n;
            table[x][y] = static_cast<uint32_t>(((a + b) % 2) * n + k);
        }
    }
    return FiniteGroup("d" + std::to_string(n), std::move(table));
}

FiniteGroup group_from_name(std::string_view name) {
    if (name.size() < 2 || (name[0] != 'z' && name[0] != 'd')) {
        throw std::invalid_argument("unknown group '" + std::string(name) + "' (expected z<n> or d<n>)");
    }
    size_t n = 0;
    auto digits = name.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("unknown group '" + std::string(name) + "' (expected z<n> or d<n>)");
    }
    return name[0] == 'z' ? make_cyclic(n) : make_dihedral(n);
}

size_t element_order(const FiniteGroup &group, GroupElement g) {
    group.check_element(g);
    GroupElement x = g;
    size_t k = 1;
    while (x != group.identity()) {
        x = group.mul(x, g);
        k++;
    }
    return k;
}

GroupElement sample_uniform(const FiniteGroup &group, Rng &rng) {
    return GroupElement{static_cast<uint32_t>(rng.below(group.order()))};
}

WordSampler::WordSampler(const FiniteGroup &group, std::vector<GroupElement> generators, size_t word_length)
    : group_(group), generators_(std::move(generators)), word_length_(word_length) {
    if (generators_.empty()) {
        throw std::invalid_argument("word sampler needs at least one generator");
    }
    for (GroupElement g : generators_) {
        group_.check_element(g);
    }
    if (group_.generated_subgroup(generators_).size() != group_.order()) {
        throw std::invalid_argument("word sampler generators do not generate group '" + group_.name() + "'");
    }
}

GroupElement WordSampler::sample(Rng &rng) const {
    GroupElement x = group_.identity();
    for (size_t i = 0; i < word_length_; i++) {
        x = group_.mul(x, generators_[rng.below(generators_.size())]);
    }
    return x;
}

std::vector<double> WordSampler::distribution() const {
    size_t n = group_.order();
    std::vector<double> dist(n, 0.0);
    dist[group_.identity().index] = 1.0;
    double weight = 1.0 / static_cast<double>(generators_.size());
    std::vector<double> next(n);
    for (size_t step = 0; step < word_length_; step++) {
        std::fill(next.begin(), next.end(), 0.0);
        for (uint32_t x = 0; x < n; x++) {
            if (dist[x] == 0.0) {
                continue;
            }
            for (GroupElement g : generators_) {
                next[group_.mul(GroupElement{x}, g).index] += dist[x] * weight;
            }
        }
        dist.swap(next);
    }
    return dist;
}

GroupElement sample_word(const WordSampler &sampler, Rng &rng) {
    return sampler.sample(rng);
}

std::vector<double> word_distribution(const WordSampler &sampler) {
    return sampler.distribution();
}

double tv_distance_to_uniform(const std::vector<double> &distribution) {
    double u = 1.0 / static_cast<double>(distribution.size());
    double total = 0;
    for (double p : distribution) {
        total += std::abs(p - u);
    }
    return total / 2;
}

}  // namespace gaugedrift
