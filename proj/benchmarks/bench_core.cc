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

#include <benchmark/benchmark.h>

#include "gaugedrift/drift.h"
#include "gaugedrift/lattice.h"
#include "gaugedrift/mitigation.h"

using namespace gaugedrift;

static void bench_build_projector_d3(benchmark::State &state) {
    auto model = LatticeModel::two_link_plaquette(make_dihedral(3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_projector(model));
    }
}
BENCHMARK(bench_build_projector_d3);

static void bench_random_drift_d3(benchmark::State &state) {
    auto p = build_projector(LatticeModel::two_link_plaquette(make_dihedral(3)));
    Rng rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(random_drift(p, 0.01, rng));
    }
}
BENCHMARK(bench_random_drift_d3);

static void bench_trajectory(benchmark::State &state, MitigationMode mode, DriftSampling sampling) {
    ExperimentConfig cfg(LatticeModel::two_link_plaquette(make_dihedral(3)));
    cfg.drift.kind = RandomHermitianDrift{0.01, 0};
    cfg.drift.sampling = sampling;
    cfg.mode = mode;
    cfg.steps = 100;
    Experiment experiment(cfg);
    size_t index = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(experiment.run_trajectory(index++));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * cfg.steps));
}
BENCHMARK_CAPTURE(bench_trajectory, haar_fixed_drift, MitigationMode::kHaar, DriftSampling::kPerTrajectory);
BENCHMARK_CAPTURE(bench_trajectory, haar_per_step_drift, MitigationMode::kHaar, DriftSampling::kPerStep);
BENCHMARK_CAPTURE(bench_trajectory, zeno_fixed_drift, MitigationMode::kZeno, DriftSampling::kPerTrajectory);
BENCHMARK_MAIN();
