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

#include "gaugedrift/runner.h"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "gaugedrift/growth_fit.h"

namespace gaugedrift {

namespace fs = std::filesystem;

namespace {

ConfigDocument load_manifest_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path, 0, "", "cannot open manifest");
    }
    nlohmann::json manifest;
    try {
        in >> manifest;
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(path, 0, "", std::string("manifest is not valid JSON: ") + e.what());
    }
    if (!manifest.contains("config") || !manifest["config"].is_object()) {
        throw ConfigError(path, 0, "config", "manifest has no config object");
    }
    ConfigDocument doc(path);
    for (const auto &[key, literal] : manifest["config"].items()) {
        if (!literal.is_string()) {
            throw ConfigError(path, 0, key, "manifest config values must be literal strings");
        }
        try {
            doc.set(key, parse_config_value(literal.get<std::string>()), 0);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(path, 0, key, e.what());
        }
    }
    return doc;
}

std::string manifest_json(
    const ConfigDocument &doc, const ExperimentConfig &cfg, size_t threads, double seconds) {
    nlohmann::ordered_json m;
    m["tool"] = "gaugedrift";
    m["version"] = GAUGEDRIFT_VERSION;
    m["master_seed"] = cfg.seed;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    for (const auto &[key, entry] : doc.entries()) {
        config[key] = entry.value.to_literal();
    }
    m["config"] = config;
    m["threads"] = threads;
    m["outputs"] = {kStepsFile, kSummaryFile};
    m["wall_clock_seconds"] = seconds;
    return m.dump(2) + "\n";
}

std::string final_value(const EnsembleStatistics &stats, double StepStatistics::*field) {
    return stats.steps.empty() ? "nan" : format_double(stats.steps.back().*field);
}

}  // namespace

ConfigDocument effective_config(const RunOptions &options) {
    if (options.config_path.has_value() == options.manifest_path.has_value()) {
        throw ConfigError("<command line>", 0, "", "give exactly one of --config or --manifest");
    }
    ConfigDocument doc =
        options.config_path ? load_config_file(*options.config_path) : load_manifest_config(*options.manifest_path);
    for (const std::string &o : options.overrides) {
        doc.apply_override(o);
    }
    if (options.trajectories) {
        doc.set("trajectories", ConfigValue(static_cast<int64_t>(*options.trajectories)), 0);
    }
    return doc;
}

std::string steps_csv(const EnsembleStatistics &stats) {
    CsvTable t;
    t.header = {"step", "mean_survival", "se_survival", "mean_unphys_weight", "se_unphys_weight", "zeno_fail_rate"};
    t.rows.reserve(stats.steps.size());
    for (size_t i = 0; i < stats.steps.size(); i++) {
        const StepStatistics &s = stats.steps[i];
        t.rows.push_back({
            std::to_string(i + 1),
            format_double(s.mean_survival),
            format_double(s.se_survival),
            format_double(s.mean_unphysical_weight),
            format_double(s.se_unphysical_weight),
            format_double(s.zeno_fail_rate),
        });
    }
    return t.to_string();
}

std::string summary_csv(const ExperimentConfig &config, const EnsembleStatistics &stats) {
    CsvTable t;
    t.header = {"mode",     "quantity", "status",   "slope",
                "intercept", "first_step", "last_step", "points",
                "residual", "final_mean_survival", "final_se_survival"};
    std::vector<double> weights;
    weights.reserve(stats.steps.size());
    for (const StepStatistics &s : stats.steps) {
        weights.push_back(s.mean_unphysical_weight);
    }
    std::vector<std::string> row{std::string(to_string(config.mode)), "unphysical_weight"};
    try {
        GrowthFit fit = fit_growth(weights);
        row.insert(row.end(), {"ok", format_double(fit.slope), format_double(fit.intercept),
                               std::to_string(fit.first_step), std::to_string(fit.last_step),
                               std::to_string(fit.points), format_double(fit.residual)});
    } catch (const TooFewPointsError &) {
        row.insert(row.end(), {"too_few_points", "", "", "", "", "", ""});
    }
    row.push_back(final_value(stats, &StepStatistics::mean_survival));
    row.push_back(final_value(stats, &StepStatistics::se_survival));
    t.rows.push_back(std::move(row));
    return t.to_string();
}

RunOutputs run_experiment(const RunOptions &options) {
    ConfigDocument doc = effective_config(options);
    ExperimentConfig cfg = experiment_from_config(doc);

    fs::create_directories(options.output_dir);
    auto start = std::chrono::steady_clock::now();
    Experiment experiment(cfg);
    EnsembleStatistics stats = run_ensemble(experiment, options.threads);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    RunOutputs out;
    out.steps_path = (fs::path(options.output_dir) / kStepsFile).string();
    out.summary_path = (fs::path(options.output_dir) / kSummaryFile).string();
    out.manifest_path = (fs::path(options.output_dir) / kManifestFile).string();
    write_text_file(out.steps_path, steps_csv(stats));
    write_text_file(out.summary_path, summary_csv(cfg, stats));
    write_text_file(out.manifest_path, manifest_json(doc, cfg, options.threads, seconds));
    out.stats = std::move(stats);
    return out;
}

namespace {

std::string run_label(const std::string &dir) {
    std::string label = dir;
    std::ifstream in(fs::path(dir) / kManifestFile, std::ios::binary);
    if (!in) {
        return label;
    }
    try {
        nlohmann::json m;
        in >> m;
        if (m.contains("config") && m["config"].contains("mode")) {
            ConfigValue mode = parse_config_value(m["config"]["mode"].get<std::string>());
            if (mode.is_string()) {
                label += " [mode=" + std::get<std::string>(mode.data()) + "]";
            }
        }
    } catch (const std::exception &) {
        // Labels are cosmetic; an unreadable manifest just loses the mode.
    }
    return label;
}

}  // namespace

Comparison compare_runs(const std::string &run_a_dir, const std::string &run_b_dir) {
    CsvTable a = read_csv_file((fs::path(run_a_dir) / kStepsFile).string());
    CsvTable b = read_csv_file((fs::path(run_b_dir) / kStepsFile).string());
    if (a.rows.size() != b.rows.size()) {
        throw std::runtime_error(
            "step counts differ: " + std::to_string(a.rows.size()) + " vs " + std::to_string(b.rows.size()));
    }
    if (a.rows.empty()) {
        throw std::runtime_error("runs have no steps");
    }
    size_t step_col = a.column("step");
    size_t surv_a = a.column("mean_survival"), se_a = a.column("se_survival"), unphys_a = a.column("mean_unphys_weight");
    size_t surv_b = b.column("mean_survival"), se_b = b.column("se_survival"), unphys_b = b.column("mean_unphys_weight");

    Comparison out;
    out.merged.header = {"step",           "survival_a",  "se_survival_a", "survival_b",     "se_survival_b",
                         "survival_diff", "combined_se", "unphys_weight_a", "unphys_weight_b"};
    double diff = 0, combined = 0, final_a = 0, final_b = 0;
    for (size_t i = 0; i < a.rows.size(); i++) {
        const auto &ra = a.rows[i];
        const auto &rb = b.rows[i];
        if (ra[step_col] != rb[b.column("step")]) {
            throw std::runtime_error("step labels differ at row " + std::to_string(i + 1));
        }
        final_a = parse_double(ra[surv_a]);
        final_b = parse_double(rb[surv_b]);
        double sa = parse_double(ra[se_a]), sb = parse_double(rb[se_b]);
        diff = final_a - final_b;
        combined = std::sqrt(sa * sa + sb * sb);
        out.merged.rows.push_back({ra[step_col], ra[surv_a], ra[se_a], rb[surv_b], rb[se_b], format_double(diff),
                                   format_double(combined), ra[unphys_a], rb[unphys_b]});
    }

    std::string label_a = run_label(run_a_dir), label_b = run_label(run_b_dir);
    std::ostringstream v;
    v << "final step " << a.rows.back()[step_col] << ": " << label_a << " survival " << format_double(final_a) << "; "
      << label_b << " survival " << format_double(final_b) << "; ";
    if (final_a == final_b) {
        v << "neither run retained higher survival (tie)";
    } else {
        const std::string &winner = final_a > final_b ? label_a : label_b;
        v << "higher survival: " << winner << " (difference " << format_double(std::abs(diff));
        if (combined > 0) {
            v << ", " << format_double(std::abs(diff) / combined) << " combined SE";
        }
        v << ")";
    }
    out.verdict = v.str();
    return out;
}

}  // namespace gaugedrift
