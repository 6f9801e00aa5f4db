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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gaugedrift/tolerances.h"

namespace gaugedrift {

LatticeModel::LatticeModel(FiniteGroup group, size_t num_sites, std::vector<Link> links, size_t dimension_cap)
    : group_(std::move(group)), num_sites_(num_sites), links_(std::move(links)), dim_(1) {
    if (num_sites_ == 0) {
        throw std::invalid_argument("lattice needs at least one site");
    }
    for (size_t l = 0; l < links_.size(); l++) {
        if (links_[l].tail >= num_sites_ || links_[l].head >= num_sites_) {
            throw std::invalid_argument(
                "link " + std::to_string(l) + " has an endpoint outside the " + std::to_string(num_sites_) +
                " sites");
        }
    }
    for (size_t l = 0; l < links_.size(); l++) {
        if (dim_ > dimension_cap / group_.order()) {
            throw std::length_error(
                "basis dimension " + std::to_string(group_.order()) + "^" + std::to_string(links_.size()) +
                " exceeds the dimension cap " + std::to_string(dimension_cap));
        }
        dim_ *= group_.order();
    }
}

LatticeModel LatticeModel::two_link_plaquette(FiniteGroup group, size_t dimension_cap) {
    return LatticeModel(std::move(group), 2, {{0, 1}, {1, 0}}, dimension_cap);
}

size_t LatticeModel::basis_index(std::span<const GroupElement> config) const {
    if (config.size() != links_.size()) {
        throw std::invalid_argument(
            "configuration has " + std::to_string(config.size()) + " links, lattice has " +
            std::to_string(links_.size()));
    }
    size_t index = 0;
    for (GroupElement u : config) {
        group_.check_element(u);
        index = index * group_.order() + u.index;
    }
    return index;
}

std::vector<GroupElement> LatticeModel::config_of(size_t index) const {
    if (index >= dim_) {
        throw std::out_of_range("basis index " + std::to_string(index) + " >= dimension " + std::to_string(dim_));
    }
    std::vector<GroupElement> config(links_.size());
    for (size_t l = links_.size(); l-- > 0;) {
        config[l] = GroupElement{static_cast<uint32_t>(index % group_.order())};
        index /= group_.order();
    }
    return config;
}

Permutation Permutation::identity(size_t n) {
    std::vector<uint32_t> image(n);
    for (size_t i = 0; i < n; i++) {
        image[i] = static_cast<uint32_t>(i);
    }
    return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < image_.size(); i++) {
        if (image_[i] != i) {
            return false;
        }
    }
    return true;
}

StateVector Permutation::apply(const StateVector &v) const {
    StateVector out(v.dim());
    StateVector copy = v;
    apply_in_place(copy, out);
    return copy;
}

void Permutation::apply_in_place(StateVector &v, StateVector &scratch) const {
    if (v.dim() != image_.size()) {
        throw std::invalid_argument("permutation size does not match state dimension");
    }
    if (scratch.dim() != v.dim()) {
        scratch = StateVector(v.dim());
    }
    for (size_t i = 0; i < image_.size(); i++) {
        scratch[image_[i]] = v[i];
    }
    std::swap(v, scratch);
}

ComplexMatrix Permutation::to_matrix() const {
    ComplexMatrix m(image_.size(), image_.size());
    for (size_t i = 0; i < image_.size(); i++) {
        m(image_[i], i) = 1.0;
    }
    return m;
}

namespace {

void check_transform(const LatticeModel &model, const GaugeTransform &t) {
    if (t.site_elements.size() != model.num_sites()) {
        throw std::invalid_argument(
            "gauge transform has " + std::to_string(t.site_elements.size()) + " sites, lattice has " +
            std::to_string(model.num_sites()));
    }
    for (GroupElement g : t.site_elements) {
        model.group().check_element(g);
    }
}

}  // namespace

GaugeTransform compose(const LatticeModel &model, const GaugeTransform &t1, const GaugeTransform &t2) {
    check_transform(model, t1);
    check_transform(model, t2);
    GaugeTransform out{std::vector<GroupElement>(model.num_sites())};
    for (size_t x = 0; x < model.num_sites(); x++) {
        out.site_elements[x] = model.group().mul(t1.site_elements[x], t2.site_elements[x]);
    }
    return out;
}

size_t num_transforms(const LatticeModel &model) {
    size_t n = 1;
    for (size_t x = 0; x < model.num_sites(); x++) {
        if (n > SIZE_MAX / model.group().order()) {
            return SIZE_MAX;
        }
        n *= model.group().order();
    }
    return n;
}

GaugeTransform transform_from_index(const LatticeModel &model, size_t index) {
    size_t order = model.group().order();
    GaugeTransform t{std::vector<GroupElement>(model.num_sites())};
    for (size_t x = model.num_sites(); x-- > 0;) {
        t.site_elements[x] = GroupElement{static_cast<uint32_t>(index % order)};
        index /= order;
    }
    if (index != 0) {
        throw std::out_of_range("gauge transform index out of range");
    }
    return t;
}

GaugeTransform sample_transform(const LatticeModel &model, Rng &rng) {
    GaugeTransform t{std::vector<GroupElement>(model.num_sites())};
    for (auto &g : t.site_elements) {
        g = sample_uniform(model.group(), rng);
    }
    return t;
}

Permutation gauge_permutation(const LatticeModel &model, const GaugeTransform &t) {
    check_transform(model, t);
    const FiniteGroup &group = model.group();
    const auto &links = model.links();
    size_t order = group.order();

    // Per-link lookup: new element for each old element.
    std::vector<std::vector<uint32_t>> link_maps(links.size(), std::vector<uint32_t>(order));
    for (size_t l = 0; l < links.size(); l++) {
        GroupElement left = t.site_elements[links[l].tail];
        GroupElement right = group.inv(t.site_elements[links[l].head]);
        for (uint32_t u = 0; u < order; u++) {
            link_maps[l][u] = group.mul(group.mul(left, GroupElement{u}), right).index;
        }
    }

    std::vector<uint32_t> image(model.dim());
    for (size_t i = 0; i < model.dim(); i++) {
        size_t rest = i;
        size_t out = 0;
        size_t place = 1;
        for (size_t l = links.size(); l-- > 0;) {
            uint32_t u = static_cast<uint32_t>(rest % order);
            rest /= order;
            out += link_maps[l][u] * place;
            place *= order;
        }
        image[i] = static_cast<uint32_t>(out);
    }
    return Permutation(std::move(image));
}

ComplexMatrix gauge_operator(const LatticeModel &model, const GaugeTransform &t) {
    return gauge_permutation(model, t).to_matrix();
}

GaugeProjector::GaugeProjector(ComplexMatrix matrix, std::vector<StateVector> physical_basis)
    : matrix_(std::move(matrix)), basis_(std::move(physical_basis)) {
    if (!matrix_.is_square()) {
        throw std::invalid_argument("projector matrix is not square");
    }
    for (const StateVector &b : basis_) {
        if (b.dim() != matrix_.rows()) {
            throw std::invalid_argument("physical basis vector dimension does not match projector");
        }
    }
}

StateVector GaugeProjector::project(const StateVector &v) const {
    StateVector out(v.dim());
    for (const StateVector &b : basis_) {
        Complex c = overlap(b, v);
        for (size_t i = 0; i < v.dim(); i++) {
            out[i] += c * b[i];
        }
    }
    return out;
}

double GaugeProjector::physical_weight(const StateVector &v) const {
    double w = 0;
    for (const StateVector &b : basis_) {
        w += std::norm(overlap(b, v));
    }
    return w;
}

GaugeProjector build_projector(const LatticeModel &model) {
    size_t count = num_transforms(model);
    if (count > kMaxProjectorTransforms) {
        throw std::length_error(
            "projector needs " + (count == SIZE_MAX ? std::string("too many") : std::to_string(count)) +
            " gauge transforms; limit is " + std::to_string(kMaxProjectorTransforms));
    }
    size_t dim = model.dim();
    // Accumulate integer counts so the average is exact before the division.
    std::vector<size_t> hits(dim * dim, 0);
    for (size_t k = 0; k < count; k++) {
        Permutation p = gauge_permutation(model, transform_from_index(model, k));
        for (size_t i = 0; i < dim; i++) {
            hits[p[i] * dim + i]++;
        }
    }
    ComplexMatrix p(dim, dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            p(r, c) = static_cast<double>(hits[r * dim + c]) / static_cast<double>(count);
        }
    }
    auto basis = physical_basis(p);
    return GaugeProjector(std::move(p), std::move(basis));
}

std::vector<StateVector> physical_basis(const ComplexMatrix &projector) {
    HermitianEig eig = hermitian_eig(projector);
    size_t rank = 0;
    for (double lambda : eig.eigenvalues) {
        if (lambda > tol::kAmbiguityLow && lambda < tol::kAmbiguityHigh) {
            throw std::runtime_error(
                "projector eigenvalue " + std::to_string(lambda) + " is neither 0 nor 1; projector is broken");
        }
        if (lambda < 0.5) {
            continue;
        }
        if (std::abs(lambda - 1) > tol::kPhysicalEigenvalue) {
            throw std::runtime_error("projector eigenvalue " + std::to_string(lambda) + " is not within tolerance of 1");
        }
        rank++;
    }

    // The eigenvectors of a degenerate eigenvalue are only fixed up to a
    // rotation, so the returned basis is built canonically instead: project
    // computational basis states in index order and orthonormalize.
    size_t dim = projector.rows();
    std::vector<StateVector> basis;
    for (size_t i = 0; i < dim && basis.size() < rank; i++) {
        StateVector v(dim);
        for (size_t r = 0; r < dim; r++) {
            v[r] = projector(r, i);
        }
        for (int pass = 0; pass < 2; pass++) {
            for (const StateVector &b : basis) {
                Complex c = overlap(b, v);
                for (size_t r = 0; r < dim; r++) {
                    v[r] -= c * b[r];
                }
            }
        }
        if (v.norm() > 1e-6) {
            basis.push_back(v.normalized());
        }
    }
    if (basis.size() != rank) {
        throw std::runtime_error("could not build an orthonormal basis of the projector image");
    }
    return basis;
}

std::vector<StateVector> physical_basis(const GaugeProjector &projector) {
    return physical_basis(projector.matrix());
}

ComplexMatrix z2_two_link_hamiltonian() {
    // Basis index 2*a + b. sigma_x on link a flips the high bit, on b the low bit.
    ComplexMatrix h(4, 4);
    for (size_t i = 0; i < 4; i++) {
        size_t a = i >> 1, b = i & 1;
        h(i ^ 2, i) += 1.0;
        h(i ^ 1, i) += 1.0;
        h(i, i) += (a == b) ? 1.0 : -1.0;
    }
    return h;
}

double unphysical_weight(const GaugeProjector &projector, const StateVector &v) {
    return std::max(0.0, 1.0 - projector.physical_weight(v));
}

}  // namespace gaugedrift
