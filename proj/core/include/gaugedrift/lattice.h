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

#ifndef GAUGEDRIFT_LATTICE_H
#define GAUGEDRIFT_LATTICE_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gaugedrift/finite_group.h"
#include "gaugedrift/linalg.h"

namespace gaugedrift {

inline constexpr size_t kDefaultDimensionCap = 4096;
inline constexpr size_t kMaxProjectorTransforms = 10000;

/// An oriented link. A gauge transformation acts on its group element as
/// u -> g[tail] * u * g[head]^-1.
struct Link {
    size_t tail;
    size_t head;

    bool operator==(const Link &) const = default;
};

/// Pure-gauge lattice: sites, oriented links and the group living on each
/// link. The computational basis holds one group element per link and is
/// indexed mixed-radix with link 0 most significant.
class LatticeModel {
   public:
    LatticeModel(FiniteGroup group, size_t num_sites, std::vector<Link> links, size_t dimension_cap = kDefaultDimensionCap);

    /// Two sites joined by links a: 0->1 and b: 1->0, forming one plaquette.
    static LatticeModel two_link_plaquette(FiniteGroup group, size_t dimension_cap = kDefaultDimensionCap);

    const FiniteGroup &group() const {
        return group_;
    }
    size_t num_sites() const {
        return num_sites_;
    }
    size_t num_links() const {
        return links_.size();
    }
    const std::vector<Link> &links() const {
        return links_;
    }
    /// |G|^L
    size_t dim() const {
        return dim_;
    }

    size_t basis_index(std::span<const GroupElement> config) const;
    std::vector<GroupElement> config_of(size_t index) const;

   private:
    FiniteGroup group_;
    size_t num_sites_;
    std::vector<Link> links_;
    size_t dim_;
};

/// One group element per site.
struct GaugeTransform {
    std::vector<GroupElement> site_elements;

    bool operator==(const GaugeTransform &) const = default;
};

/// Basis permutation: |i> -> |image[i]>.
class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<uint32_t> image) : image_(std::move(image)) {
    }

    static Permutation identity(size_t n);

    size_t size() const {
        return image_.size();
    }
    uint32_t operator[](size_t i) const {
        return image_[i];
    }
    bool is_identity() const;

    StateVector apply(const StateVector &v) const;
    /// In-place variant; `scratch` is resized as needed.
    void apply_in_place(StateVector &v, StateVector &scratch) const;
    ComplexMatrix to_matrix() const;

    bool operator==(const Permutation &) const = default;

   private:
    std::vector<uint32_t> image_;
};

/// Site-wise product (t1 t2)[x] = t1[x] t2[x].
GaugeTransform compose(const LatticeModel &model, const GaugeTransform &t1, const GaugeTransform &t2);

/// |G|^V
size_t num_transforms(const LatticeModel &model);
/// Enumerates G^V mixed-radix, site 0 most significant.
GaugeTransform transform_from_index(const LatticeModel &model, size_t index);

/// Haar-random transform: each site element independent and uniform.
GaugeTransform sample_transform(const LatticeModel &model, Rng &rng);

/// phi(t) as a basis permutation.
Permutation gauge_permutation(const LatticeModel &model, const GaugeTransform &t);
/// phi(t) as a dense matrix.
ComplexMatrix gauge_operator(const LatticeModel &model, const GaugeTransform &t);

/// Orthogonal projector onto the gauge-invariant subspace, together with
/// an orthonormal basis of that subspace.
class GaugeProjector {
   public:
    GaugeProjector(ComplexMatrix matrix, std::vector<StateVector> physical_basis);

    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    size_t dim() const {
        return matrix_.rows();
    }
    size_t physical_dim() const {
        return basis_.size();
    }
    const std::vector<StateVector> &basis() const {
        return basis_;
    }

    /// P v, evaluated through the physical basis.
    StateVector project(const StateVector &v) const;
    /// |P v|^2
    double physical_weight(const StateVector &v) const;

   private:
    ComplexMatrix matrix_;
    std::vector<StateVector> basis_;
};

/// P = |G|^-V sum_t phi(t). Throws std::length_error if G^V has more than
/// kMaxProjectorTransforms elements.
GaugeProjector build_projector(const LatticeModel &model);

/// Orthonormal eigenvectors of a projector matrix with eigenvalue 1.
/// Throws std::runtime_error if any eigenvalue lies in (0.1, 0.9).
std::vector<StateVector> physical_basis(const ComplexMatrix &projector);
std::vector<StateVector> physical_basis(const GaugeProjector &projector);

/// sigma_x(a) + sigma_x(b) + sigma_z(a) sigma_z(b) in the order |00>, |01>, |10>, |11>.
ComplexMatrix z2_two_link_hamiltonian();

/// 1 - |P v|^2, clamped at zero.
double unphysical_weight(const GaugeProjector &projector, const StateVector &v);

}  // namespace gaugedrift

#endif
