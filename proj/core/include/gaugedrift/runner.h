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

#ifndef GAUGEDRIFT_RUNNER_H
#define GAUGEDRIFT_RUNNER_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gaugedrift/config.h"
#include "gaugedrift/csv.h"
#include "gaugedrift/mitigation.h"

namespace gaugedrift {

inline constexpr const char *kStepsFile = "steps.csv";
inline constexpr const char *kSummaryFile = "summary.csv";
inline constexpr const char *kManifestFile = "manifest.json";

struct RunOptions {
    /// Exactly one of config_path / manifest_path is set.
    std::optional<std::string> config_path;
    std::optional<std::string> manifest_path;
    std::string output_dir = ".";
    /// "key=value", applied in order after the file.
    std::vector<std::string> overrides;
    std::optional<size_t> trajectories;
    size_t threads = 1;
};

struct RunOutputs {
    std::string steps_path;
    std::string summary_path;
    std::string manifest_path;
    EnsembleStatistics stats;
};

/// Loads the config (or the config stored in a manifest) and applies the
/// overrides. Throws ConfigError.
ConfigDocument effective_config(const RunOptions &options);

/// Runs the ensemble and writes steps.csv, summary.csv and manifest.json
/// into options.output_dir (created if missing). Config problems throw
/// ConfigError; everything else is a runtime failure.
RunOutputs run_experiment(const RunOptions &options);

std::string steps_csv(const EnsembleStatistics &stats);
std::string summary_csv(const ExperimentConfig &config, const EnsembleStatistics &stats);

struct Comparison {
    CsvTable merged;
    std::string verdict;
};

/// Joins two runs' steps.csv on step. Throws std::runtime_error if the step
/// counts differ.
Comparison compare_runs(const std::string &run_a_dir, const std::string &run_b_dir);

}  // namespace gaugedrift

#endif
