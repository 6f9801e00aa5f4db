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

#ifndef GAUGEDRIFT_MITIGATION_H
#define GAUGEDRIFT_MITIGATION_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gaugedrift/drift.h"
#include "gaugedrift/finite_group.h"
#include "gaugedrift/lattice.h"
#include "gaugedrift/linalg.h"
#include "gaugedrift/rng.h"

namespace gaugedrift {

/// What happens after the drift in each step.
enum class MitigationMode {
    kNone,  // nothing
    kHaar,  // uniform random gauge transformation over G^V
    kWord,  // each site element drawn as a random word in the generators
    kZeno,  // controlled random transformation plus ancilla X measurement
};

std::string_view to_string(MitigationMode mode);
MitigationMode mitigation_mode_from_string(std::string_view name);

enum class StepStage { kHamiltonian, kDrift, kGauge };

std::string_view to_string(StepStage stage);
StepStage step_stage_from_string(std::string_view name);

struct ExperimentConfig {
    explicit ExperimentConfig(LatticeModel lattice) : model(std::move(lattice)) {
    }

    LatticeModel model;
    DriftSpec drift;
    size_t steps = 1;
    size_t trajectories = 1;
    MitigationMode mode = MitigationMode::kNone;
    /// Used by kWord.
    std::vector<GroupElement> word_generators;
    size_t word_length = 0;
    /// Restrict sampled transforms to those acting nontrivially on the basis.
    bool force_nontrivial = false;
    uint64_t seed = 0;
    /// Physical evolution exp(-i H dt) applied in the kHamiltonian stage.
    std::optional<ComplexMatrix> hamiltonian;
    double dt = 0;
    /// Index into the physical basis.
    size_t initial_state = 0;
    std::array<StepStage, 3> order{StepStage::kHamiltonian, StepStage::kDrift, StepStage::kGauge};

    /// Throws std::invalid_argument on inconsistent settings.
    void validate() const;
};

struct TrajectoryRecord {
    /// |<psi(0)|psi(step)>|^2 for steps 1..n; NaN after a Zeno failure.
    std::vector<double> survival_probability;
    /// 1 - |P psi(step)|^2 for steps 1..n; NaN after a Zeno failure.
    std::vector<double> unphysical_weight;
    size_t zeno_failures = 0;
    /// 1-based step at which a Zeno measurement failed.
    std::optional<size_t> failed_at_step;
    StateVector final_state;
};

enum class ZenoOutcome { kPass, kFail };

/// Unnormalized post-measurement branches of the controlled-transform
/// protocol: pass = (I + phi)/2 psi, fail = (I - phi)/2 psi.
struct ZenoBranches {
    StateVector pass;
    StateVector fail;
    double pass_probability = 0;
    double fail_probability = 0;
};

ZenoBranches zeno_branches(const StateVector &state, const Permutation &phi);

struct ZenoStepResult {
    StateVector state;
    ZenoOutcome outcome;
};

/// Measures the ancilla with Born-rule probabilities drawn from `rng` and
/// returns the normalized branch. Throws std::runtime_error if the sampled
/// branch has zero norm.
ZenoStepResult zeno_step(const StateVector &state, const Permutation &phi, Rng &rng);

/// Precomputed pieces shared by every trajectory of one experiment.
class Experiment {
   public:
    explicit Experiment(ExperimentConfig config);

    const ExperimentConfig &config() const {
        return config_;
    }
    const GaugeProjector &projector() const {
        return projector_;
    }
    const StateVector &initial_state() const {
        return initial_;
    }

    /// Deterministic in (config.seed, trajectory_index).
    TrajectoryRecord run_trajectory(size_t trajectory_index) const;

   private:
    GaugeTransform draw_transform(Rng &rng) const;

    ExperimentConfig config_;
    GaugeProjector projector_;
    StateVector initial_;
    std::optional<ComplexMatrix> hamiltonian_step_;
    std::optional<ComplexMatrix> shared_drift_;
    std::optional<WordSampler> word_sampler_;
};

TrajectoryRecord run_trajectory(const ExperimentConfig &config, size_t trajectory_index);

struct StepStatistics {
    double mean_survival = 0;
    double se_survival = 0;
    double mean_unphysical_weight = 0;
    double se_unphysical_weight = 0;
    /// Fraction of trajectories whose Zeno measurement has failed by this step.
    double zeno_fail_rate = 0;
    /// Trajectories still contributing to the means.
    size_t active = 0;
};

struct EnsembleStatistics {
    size_t trajectories = 0;
    std::vector<StepStatistics> steps;
};

/// Reduces records in index order. Failed Zeno trajectories drop out of the
/// means from their failure step onward.
EnsembleStatistics reduce_records(std::span<const TrajectoryRecord> records);

/// Runs all trajectories on up to `threads` worker threads. The result does
/// not depend on the thread count.
EnsembleStatistics run_ensemble(const Experiment &experiment, size_t threads = 1);
EnsembleStatistics run_ensemble(const ExperimentConfig &config, size_t threads = 1);

}  // namespace gaugedrift

#endif
