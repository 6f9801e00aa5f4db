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

#ifndef GAUGEDRIFT_DRIFT_H
#define GAUGEDRIFT_DRIFT_H

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "gaugedrift/lattice.h"
#include "gaugedrift/linalg.h"
#include "gaugedrift/rng.h"

namespace gaugedrift {

/// Rotation by arcsin(epsilon) in the (|0+>, |0->) plane of the Z2
/// two-link model; identity on |1+>, |1->.
struct Z2RotationDrift {
    double epsilon = 0;
};

/// exp(-i (H - PHP)) with H the Hermitian part of a matrix whose real and
/// imaginary parts are uniform in [-amplitude, amplitude].
struct RandomHermitianDrift {
    double amplitude = 0.01;
    uint64_t seed = 0;
};

/// When a random drift is drawn.
enum class DriftSampling {
    kPerExperiment,  // one drift shared by every trajectory and step
    kPerTrajectory,  // one drift per trajectory, fixed across its steps
    kPerStep,        // fresh drift before every step
};

std::string_view to_string(DriftSampling sampling);
DriftSampling drift_sampling_from_string(std::string_view name);

struct DriftSpec {
    std::variant<Z2RotationDrift, RandomHermitianDrift> kind;
    DriftSampling sampling = DriftSampling::kPerExperiment;

    /// Throws std::invalid_argument if epsilon is outside [0, 1] or the
    /// amplitude is not positive.
    void validate() const;
};

/// 4x4 Z2 rotation drift in the computational basis |00>, |01>, |10>, |11>.
/// U|0+> = sqrt(1 - eps^2)|0+> + eps|0->.
ComplexMatrix z2_rotation_drift(double epsilon);

/// H - PHP for a freshly drawn Hermitian H.
ComplexMatrix random_drift_generator(const GaugeProjector &projector, double amplitude, Rng &rng);

/// exp(-i (H - PHP)), drawn from `rng`.
ComplexMatrix random_drift(const GaugeProjector &projector, double amplitude, Rng &rng);
/// Same, seeded.
ComplexMatrix random_drift(const GaugeProjector &projector, double amplitude, uint64_t seed);

/// U = A + eps V with A block-diagonal and eps V block-off-diagonal with
/// respect to the physical subspace.
struct BlockDecomposition {
    ComplexMatrix block_diagonal;
    ComplexMatrix off_block;
    /// Spectral norm of off_block.
    double epsilon_est = 0;
};

/// block_diagonal = PUP + QUQ and off_block = U - block_diagonal, so the
/// two parts sum back to U up to one rounding per entry.
BlockDecomposition block_decompose(const ComplexMatrix &u, const GaugeProjector &projector);

/// Terms of U^n grouped by the step at which the off-block part first acts:
/// A^k (eps V) U^(n-1-k) for k = 0..n-1, followed by A^n. Limited to n <= 12.
std::vector<ComplexMatrix> first_appearance_expansion(const ComplexMatrix &u, const GaugeProjector &projector, size_t n);

}  // namespace gaugedrift

#endif
