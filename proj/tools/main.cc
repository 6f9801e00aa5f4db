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

// Command-line front end.
//
//   gaugedrift run --config exp.toml --output out/ [--override key=value]...
//                  [--trajectories N] [--threads N]
//   gaugedrift run --manifest out/manifest.json --output again/
//   gaugedrift compare out_haar/ out_none/ [--output merged.csv]
//
// Exit status: 0 success, 1 config or usage error, 2 runtime error.

#include <CLI11.hpp>
#include <iostream>

#include "gaugedrift/config.h"
#include "gaugedrift/csv.h"
#include "gaugedrift/runner.h"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"gaugedrift: gauge-drift suppression experiments on finite-group lattice gauge theories"};
    app.require_subcommand(1);
    app.set_version_flag("--version", GAUGEDRIFT_VERSION);

    gaugedrift::RunOptions run_options;
    std::string config_path, manifest_path;
    size_t trajectories = 0;
    auto *run = app.add_subcommand("run", "Run an experiment ensemble and write steps.csv, summary.csv, manifest.json");
    auto *config_opt = run->add_option("--config", config_path, "Experiment config file");
    auto *manifest_opt = run->add_option("--manifest", manifest_path, "Re-run the effective config stored in a manifest");
    config_opt->excludes(manifest_opt);
    run->add_option("--output", run_options.output_dir, "Output directory")->capture_default_str();
    run->add_option("--override", run_options.overrides, "key=value, applied after the file (repeatable)")
        ->allow_extra_args(false);
    auto *traj_opt = run->add_option("--trajectories", trajectories, "Override the trajectory count")
                         ->check(CLI::PositiveNumber);
    run->add_option("--threads", run_options.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    std::string dir_a, dir_b, merged_path;
    auto *compare = app.add_subcommand("compare", "Merge two runs' per-step survival and report which retained more");
    compare->add_option("run_a", dir_a, "First run directory")->required();
    compare->add_option("run_b", dir_b, "Second run directory")->required();
    compare->add_option("--output", merged_path, "Write the merged per-step CSV here (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*run) {
            if (*config_opt) {
                run_options.config_path = config_path;
            }
            if (*manifest_opt) {
                run_options.manifest_path = manifest_path;
            }
            if (*traj_opt) {
                run_options.trajectories = trajectories;
            }
            auto out = gaugedrift::run_experiment(run_options);
            std::cout << "wrote " << out.steps_path << ", " << out.summary_path << ", " << out.manifest_path << "\n";
            if (!out.stats.steps.empty()) {
                const auto &last = out.stats.steps.back();
                std::cout << "final step " << out.stats.steps.size()
                          << ": mean survival " << gaugedrift::format_double(last.mean_survival) << " +/- "
                          << gaugedrift::format_double(last.se_survival) << "\n";
            }
        } else if (*compare) {
            auto result = gaugedrift::compare_runs(dir_a, dir_b);
            if (merged_path.empty()) {
                std::cout << result.merged.to_string();
            } else {
                gaugedrift::write_text_file(merged_path, result.merged.to_string());
            }
            std::cout << result.verdict << "\n";
        }
    } catch (const gaugedrift::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
