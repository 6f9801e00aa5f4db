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

#ifndef GAUGEDRIFT_CONFIG_H
#define GAUGEDRIFT_CONFIG_H

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gaugedrift/mitigation.h"

namespace gaugedrift {

/// Experiment files use a small TOML subset:
///
///     # comment
///     seed = 7
///     group = "d3"
///     links = [[0, 1], [1, 0]]
///     drift = { kind = "random_hermitian", amplitude = 0.01, seed = 0 }
///
///     [word]
///     generators = [1, 3]
///     length = 20
///
/// Values are strings, integers, floats, booleans, single-line arrays and
/// single-line inline tables. Sections and inline tables flatten into
/// dotted keys ("word.length", "drift.kind"). See docs/config.md.
class ConfigError : public std::runtime_error {
   public:
    ConfigError(std::string source, size_t line, std::string field, const std::string &message);

    const std::string &source() const {
        return source_;
    }
    /// 1-based; 0 when the problem has no single line (e.g. a missing key).
    size_t line() const {
        return line_;
    }
    const std::string &field() const {
        return field_;
    }

   private:
    std::string source_;
    size_t line_;
    std::string field_;
};

class ConfigValue {
   public:
    using Array = std::vector<ConfigValue>;
    using Data = std::variant<bool, int64_t, double, std::string, Array>;

    ConfigValue() = default;
    ConfigValue(Data data) : data_(std::move(data)) {
    }

    const Data &data() const {
        return data_;
    }
    bool is_string() const {
        return std::holds_alternative<std::string>(data_);
    }
    bool is_integer() const {
        return std::holds_alternative<int64_t>(data_);
    }
    bool is_number() const {
        return is_integer() || std::holds_alternative<double>(data_);
    }
    bool is_bool() const {
        return std::holds_alternative<bool>(data_);
    }
    bool is_array() const {
        return std::holds_alternative<Array>(data_);
    }

    /// Text that parses back to the same value. Floats use 17 significant
    /// digits.
    std::string to_literal() const;

    bool operator==(const ConfigValue &) const = default;

   private:
    Data data_;
};

/// Parses one value literal (no inline tables). Throws std::invalid_argument.
ConfigValue parse_config_value(std::string_view text);

struct ConfigEntry {
    ConfigValue value;
    size_t line = 0;
};

class ConfigDocument {
   public:
    explicit ConfigDocument(std::string source = "<config>") : source_(std::move(source)) {
    }

    const std::string &source() const {
        return source_;
    }
    const std::map<std::string, ConfigEntry> &entries() const {
        return entries_;
    }
    bool contains(const std::string &key) const {
        return entries_.count(key) != 0;
    }
    const ConfigEntry *find(const std::string &key) const;

    /// Inserts; throws ConfigError on a duplicate key.
    void insert(const std::string &key, ConfigValue value, size_t line);
    /// Inserts or replaces.
    void set(const std::string &key, ConfigValue value, size_t line = 0);

    /// Applies "key=value". Unquoted values that are not numbers, booleans
    /// or arrays are taken as strings, so `mode=none` works.
    void apply_override(std::string_view assignment);

   private:
    std::string source_;
    std::map<std::string, ConfigEntry> entries_;
};

ConfigDocument parse_config(std::string_view text, std::string source = "<config>");
ConfigDocument load_config_file(const std::string &path);

/// Builds and validates an experiment. Unknown keys, missing required keys,
/// wrong types and invalid values raise ConfigError naming the field.
ExperimentConfig experiment_from_config(const ConfigDocument &doc);

}  // namespace gaugedrift

#endif
