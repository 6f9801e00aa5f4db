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

#include "gaugedrift/mitigation.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "gaugedrift/tolerances.h"

namespace gaugedrift {

namespace {

constexpr uint64_t kGaugeStream = 1;
constexpr uint64_t kDriftStream = 2;

ExperimentConfig validated(ExperimentConfig config) {
    config.validate();
    return config;
}

}  // namespace

std::string_view to_string(MitigationMode mode) {
    switch (mode) {
        case MitigationMode::kNone:
            return "none";
        case MitigationMode::kHaar:
            return "haar";
        case MitigationMode::kWord:
            return "word";
        case MitigationMode::kZeno:
            return "zeno";
    }
    return "?";
}

MitigationMode mitigation_mode_from_string(std::string_view name) {
    if (name == "none") {
        return MitigationMode::kNone;
    }
    if (name == "haar") {
        return MitigationMode::kHaar;
    }
    if (name == "word") {
        return MitigationMode::kWord;
    }
    if (name == "zeno") {
        return MitigationMode::kZeno;
    }
    throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected none, haar, word or zeno)");
}

std::string_view to_string(StepStage stage) {
    switch (stage) {
        case StepStage::kHamiltonian:
            return "hamiltonian";
        case StepStage::kDrift:
            return "drift";
        case StepStage::kGauge:
            return "gauge";
    }
    return "?";
}

StepStage step_stage_from_string(std::string_view name) {
    if (name == "hamiltonian") {
        return StepStage::kHamiltonian;
    }
    if (name == "drift") {
        return StepStage::kDrift;
    }
    if (name == "gauge") {
        return StepStage::kGauge;
    }
    throw std::invalid_argument(
        "unknown step stage '" + std::string(name) + "' (expected hamiltonian, drift or gauge)");
}

void ExperimentConfig::validate() const {
    if (steps == 0) {
        throw std::invalid_argument("steps must be at least 1");
    }
    if (trajectories == 0) {
        throw std::invalid_argument("trajectories must be at least 1");
    }
    drift.validate();
    if (std::holds_alternative<Z2RotationDrift>(drift.kind) && model.dim() != 4) {
        throw std::invalid_argument("the z2_rotation drift needs a 4-dimensional (Z2 two-link) model");
    }
    if (mode == MitigationMode::kWord) {
        if (word_generators.empty()) {
            throw std::invalid_argument("mode 'word' needs word generators");
        }
    }
    if (hamiltonian) {
        if (!hamiltonian->is_square() || hamiltonian->rows() != model.dim()) {
            throw std::invalid_argument(
                "hamiltonian dimension " + std::to_string(hamiltonian->rows()) + " does not match the model dimension " +
                std::to_string(model.dim()));
        }
        if (!std::isfinite(dt)) {
            throw std::invalid_argument("dt must be finite");
        }
    }
    for (size_t i = 0; i < order.size(); i++) {
        for (size_t j = i + 1; j < order.size(); j++) {
            if (order[i] == order[j]) {
                throw std::invalid_argument("step order lists a stage twice");
            }
        }
    }
}

ZenoBranches zeno_branches(const StateVector &state, const Permutation &phi) {
    StateVector moved = phi.apply(state);
    ZenoBranches b;
    b.pass = 0.5 * (state + moved);
    b.fail = 0.5 * (state - moved);
    b.pass_probability = b.pass.norm_squared();
    b.fail_probability = b.fail.norm_squared();
    return b;
}

ZenoStepResult zeno_step(const StateVector &state, const Permutation &phi, Rng &rng) {
    ZenoBranches b = zeno_branches(state, phi);
    double total = b.pass_probability + b.fail_probability;
    bool pass = rng.uniform01() * total < b.pass_probability;
    const StateVector &branch = pass ? b.pass : b.fail;
    double n = branch.norm();
    if (!(n > 0)) {
        throw std::runtime_error("zeno_step: sampled a measurement branch with zero norm");
    }
    StateVector out = branch;
    out *= 1.0 / n;
    return ZenoStepResult{std::move(out), pass ? ZenoOutcome::kPass : ZenoOutcome::kFail};
}

Experiment::Experiment(ExperimentConfig config)
    : config_(validated(std::move(config))), projector_(build_projector(config_.model)) {
    if (config_.initial_state >= projector_.physical_dim()) {
        throw std::invalid_argument(
            "initial_state " + std::to_string(config_.initial_state) + " out of range; the physical subspace has dimension " +
            std::to_string(projector_.physical_dim()));
    }
    initial_ = projector_.basis()[config_.initial_state];

    if (config_.hamiltonian) {
        hamiltonian_step_ = expm_i_hermitian(config_.dt * *config_.hamiltonian, -1);
    }

    if (const auto *z2 = std::get_if<Z2RotationDrift>(&config_.drift.kind)) {
        shared_drift_ = z2_rotation_drift(z2->epsilon);
    } else if (config_.drift.sampling == DriftSampling::kPerExperiment) {
        const auto &rh = std::get<RandomHermitianDrift>(config_.drift.kind);
        shared_drift_ = random_drift(projector_, rh.amplitude, rh.seed);
    }

    if (config_.mode == MitigationMode::kWord) {
        word_sampler_.emplace(config_.model.group(), config_.word_generators, config_.word_length);
    }

    if (config_.force_nontrivial && config_.mode != MitigationMode::kNone) {
        size_t count = num_transforms(config_.model);
        bool any = false;
        for (size_t k = 0; k < count && !any; k++) {
            any = !gauge_permutation(config_.model, transform_from_index(config_.model, k)).is_identity();
        }
        if (!any) {
            throw std::invalid_argument("force_nontrivial is set but every gauge transform acts trivially");
        }
    }
}

GaugeTransform Experiment::draw_transform(Rng &rng) const {
    if (word_sampler_) {
        GaugeTransform t{std::vector<GroupElement>(config_.model.num_sites())};
        for (auto &g : t.site_elements) {
            g = word_sampler_->sample(rng);
        }
        return t;
    }
    return sample_transform(config_.model, rng);
}

TrajectoryRecord Experiment::run_trajectory(size_t trajectory_index) const {
    const ExperimentConfig &cfg = config_;
    Rng gauge_rng = Rng::for_stream(cfg.seed, trajectory_index, kGaugeStream);

    const RandomHermitianDrift *random_kind = std::get_if<RandomHermitianDrift>(&cfg.drift.kind);
    std::optional<Rng> drift_rng;
    if (random_kind) {
        drift_rng = Rng::for_stream(derive_seed({cfg.seed, random_kind->seed}), trajectory_index, kDriftStream);
    }

    std::optional<ComplexMatrix> trajectory_drift;
    if (random_kind && cfg.drift.sampling == DriftSampling::kPerTrajectory) {
        trajectory_drift = random_drift(projector_, random_kind->amplitude, *drift_rng);
    }
    const ComplexMatrix *fixed_drift = shared_drift_ ? &*shared_drift_ : trajectory_drift ? &*trajectory_drift : nullptr;

    TrajectoryRecord record;
    record.survival_probability.assign(cfg.steps, std::numeric_limits<double>::quiet_NaN());
    record.unphysical_weight.assign(cfg.steps, std::numeric_limits<double>::quiet_NaN());

    StateVector psi = initial_;
    StateVector scratch(psi.dim());

    for (size_t step = 0; step < cfg.steps; step++) {
        bool failed = false;
        for (StepStage stage : cfg.order) {
            switch (stage) {
                case StepStage::kHamiltonian:
                    if (hamiltonian_step_) {
                        psi = apply(*hamiltonian_step_, psi);
                    }
                    break;
                case StepStage::kDrift:
                    if (fixed_drift) {
                        psi = apply(*fixed_drift, psi);
                    } else {
                        ComplexMatrix generator = random_drift_generator(projector_, random_kind->amplitude, *drift_rng);
                        psi = expm_i_hermitian_apply(generator, -1, psi);
                    }
                    break;
                case StepStage::kGauge: {
                    if (cfg.mode == MitigationMode::kNone) {
                        break;
                    }
                    Permutation phi;
                    do {
                        phi = gauge_permutation(cfg.model, draw_transform(gauge_rng));
                    } while (cfg.force_nontrivial && phi.is_identity());
                    if (cfg.mode == MitigationMode::kZeno) {
                        ZenoStepResult r = zeno_step(psi, phi, gauge_rng);
                        psi = std::move(r.state);
                        failed = r.outcome == ZenoOutcome::kFail;
                    } else {
                        phi.apply_in_place(psi, scratch);
                    }
                    break;
                }
            }
            if (failed) {
                break;
            }
        }
        if (failed) {
            record.zeno_failures = 1;
            record.failed_at_step = step + 1;
            break;
        }
        record.survival_probability[step] = std::min(1.0, std::norm(overlap(initial_, psi)));
        record.unphysical_weight[step] = unphysical_weight(projector_, psi);
    }
    record.final_state = std::move(psi);
    return record;
}

TrajectoryRecord run_trajectory(const ExperimentConfig &config, size_t trajectory_index) {
    return Experiment(config).run_trajectory(trajectory_index);
}

EnsembleStatistics reduce_records(std::span<const TrajectoryRecord> records) {
    EnsembleStatistics out;
    out.trajectories = records.size();
    if (records.empty()) {
        return out;
    }
    size_t steps = records[0].survival_probability.size();
    out.steps.resize(steps);
    double nan = std::numeric_limits<double>::quiet_NaN();

    auto mean_and_se = [&](size_t step, auto field, double &mean, double &se) {
        size_t m = 0;
        double sum = 0;
        for (const TrajectoryRecord &r : records) {
            double v = (r.*field)[step];
            if (!std::isnan(v)) {
                sum += v;
                m++;
            }
        }
        if (m == 0) {
            mean = se = nan;
            return m;
        }
        mean = sum / static_cast<double>(m);
        double ss = 0;
        for (const TrajectoryRecord &r : records) {
            double v = (r.*field)[step];
            if (!std::isnan(v)) {
                ss += (v - mean) * (v - mean);
            }
        }
        se = m > 1 ? std::sqrt(ss / static_cast<double>(m - 1) / static_cast<double>(m)) : 0.0;
        return m;
    };

    for (size_t step = 0; step < steps; step++) {
        StepStatistics &s = out.steps[step];
        s.active = mean_and_se(step, &TrajectoryRecord::survival_probability, s.mean_survival, s.se_survival);
        mean_and_se(step, &TrajectoryRecord::unphysical_weight, s.mean_unphysical_weight, s.se_unphysical_weight);
        size_t failed = 0;
        for (const TrajectoryRecord &r : records) {
            if (r.failed_at_step && *r.failed_at_step <= step + 1) {
                failed++;
            }
        }
        s.zeno_fail_rate = static_cast<double>(failed) / static_cast<double>(records.size());
    }
    return out;
}

EnsembleStatistics run_ensemble(const Experiment &experiment, size_t threads) {
    size_t n = experiment.config().trajectories;
    threads = std::clamp<size_t>(threads, 1, n);
    std::vector<TrajectoryRecord> records(n);

    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= n) {
                return;
            }
            try {
                records[i] = experiment.run_trajectory(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next.store(n);
                return;
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return reduce_records(records);
}

EnsembleStatistics run_ensemble(const ExperimentConfig &config, size_t threads) {
    return run_ensemble(Experiment(config), threads);
}

}  // namespace gaugedrift
