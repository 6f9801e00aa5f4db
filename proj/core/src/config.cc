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

#include "gaugedrift/config.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace gaugedrift {

namespace {

std::string describe(const std::string &source, size_t line, const std::string &field, const std::string &message) {
    std::string out = source;
    if (line > 0) {
        out += ":" + std::to_string(line);
    } else {
        out += " (override)";
    }
    if (!field.empty()) {
        out += ": field '" + field + "'";
    }
    return out + ": " + message;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_key_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

class ValueParser {
   public:
    explicit ValueParser(std::string_view text) : text_(text) {
    }

    using Sink = std::function<void(const std::string &, ConfigValue)>;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void fail(const std::string &what) {
        throw std::invalid_argument(what + " at column " + std::to_string(pos_ + 1));
    }

    ConfigValue value() {
        char c = peek();
        if (c == '"') {
            return ConfigValue(string());
        }
        if (c == '[') {
            return array();
        }
        if (c == '{') {
            fail("inline table not allowed here");
        }
        return scalar();
    }

    // Parses `{ k = v, ... }` and reports flattened keys.
    void table(const std::string &prefix, const Sink &sink) {
        expect('{');
        if (peek() == '}') {
            pos_++;
            return;
        }
        while (true) {
            std::string key = prefix + "." + bare_key();
            expect('=');
            if (peek() == '{') {
                table(key, sink);
            } else {
                sink(key, value());
            }
            char c = peek();
            if (c == ',') {
                pos_++;
                continue;
            }
            if (c == '}') {
                pos_++;
                return;
            }
            fail("expected ',' or '}' in inline table");
        }
    }

    std::string bare_key() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && is_key_char(text_[pos_])) {
            pos_++;
        }
        if (pos_ == start) {
            fail("expected a key");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        pos_++;
    }

   private:
    std::string string() {
        expect('"');
        std::string out;
        while (pos_ < text_.size()) {
            char c = text_[pos_++];
            if (c == '"') {
                return out;
            }
            if (c == '\\') {
                if (pos_ >= text_.size()) {
                    break;
                }
                char e = text_[pos_++];
                switch (e) {
                    case 'n':
                        out += '\n';
                        break;
                    case 't':
                        out += '\t';
                        break;
                    case '"':
                    case '\\':
                        out += e;
                        break;
                    default:
                        fail(std::string("unknown escape \\") + e);
                }
            } else {
                out += c;
            }
        }
        fail("unterminated string");
    }

    ConfigValue array() {
        expect('[');
        ConfigValue::Array items;
        while (true) {
            if (peek() == ']') {
                pos_++;
                return ConfigValue(std::move(items));
            }
            items.push_back(value());
            char c = peek();
            if (c == ',') {
                pos_++;
            } else if (c != ']') {
                fail("expected ',' or ']' in array");
            }
        }
    }

    ConfigValue scalar() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                                       text_[pos_] == '+' || text_[pos_] == '-' || text_[pos_] == '_')) {
            pos_++;
        }
        std::string token(text_.substr(start, pos_ - start));
        if (token.empty()) {
            fail("expected a value");
        }
        if (token == "true") {
            return ConfigValue(true);
        }
        if (token == "false") {
            return ConfigValue(false);
        }
        token.erase(std::remove(token.begin(), token.end(), '_'), token.end());
        const char *first = token.data() + (token[0] == '+' ? 1 : 0);
        const char *last = token.data() + token.size();
        bool floating = token.find_first_of(".eE") != std::string::npos;
        if (!floating) {
            int64_t v = 0;
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec == std::errc() && ptr == last) {
                return ConfigValue(v);
            }
        } else {
            double v = 0;
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec == std::errc() && ptr == last && std::isfinite(v)) {
                return ConfigValue(v);
            }
        }
        pos_ = start;
        fail("invalid value '" + std::string(text_.substr(start, token.size())) + "'");
    }

    std::string_view text_;
    size_t pos_ = 0;
};

std::string strip_comment(std::string_view line) {
    bool in_string = false;
    for (size_t i = 0; i < line.size(); i++) {
        char c = line[i];
        if (in_string && c == '\\') {
            i++;
        } else if (c == '"') {
            in_string = !in_string;
        } else if (c == '#' && !in_string) {
            return std::string(line.substr(0, i));
        }
    }
    return std::string(line);
}

void parse_assignment_value(
    const std::string &key, std::string_view text, const std::function<void(const std::string &, ConfigValue)> &sink) {
    ValueParser p(text);
    if (p.peek() == '{') {
        p.table(key, sink);
    } else {
        sink(key, p.value());
    }
    if (!p.at_end()) {
        p.fail("unexpected trailing text");
    }
}

}  // namespace

ConfigError::ConfigError(std::string source, size_t line, std::string field, const std::string &message)
    : std::runtime_error(describe(source, line, field, message)),
      source_(std::move(source)),
      line_(line),
      field_(std::move(field)) {
}

std::string ConfigValue::to_literal() const {
    struct Visitor {
        std::string operator()(bool b) const {
            return b ? "true" : "false";
        }
        std::string operator()(int64_t v) const {
            return std::to_string(v);
        }
        std::string operator()(double v) const {
            char buf[64];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
            std::string s(buf, ptr);
            if (s.find_first_of(".e") == std::string::npos) {
                s += ".0";
            }
            return s;
        }
        std::string operator()(const std::string &s) const {
            std::string out = "\"";
            for (char c : s) {
                if (c == '"' || c == '\\') {
                    out += '\\';
                    out += c;
                } else if (c == '\n') {
                    out += "\\n";
                } else if (c == '\t') {
                    out += "\\t";
                } else {
                    out += c;
                }
            }
            return out + "\"";
        }
        std::string operator()(const Array &items) const {
            std::string out = "[";
            for (size_t i = 0; i < items.size(); i++) {
                if (i) {
                    out += ", ";
                }
                out += items[i].to_literal();
            }
            return out + "]";
        }
    };
    return std::visit(Visitor{}, data_);
}

ConfigValue parse_config_value(std::string_view text) {
    ValueParser p(text);
    ConfigValue v = p.value();
    if (!p.at_end()) {
        p.fail("unexpected trailing text");
    }
    return v;
}

const ConfigEntry *ConfigDocument::find(const std::string &key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

void ConfigDocument::insert(const std::string &key, ConfigValue value, size_t line) {
    if (entries_.count(key)) {
        throw ConfigError(source_, line, key, "duplicate key (first set on line " + std::to_string(entries_[key].line) + ")");
    }
    entries_[key] = ConfigEntry{std::move(value), line};
}

void ConfigDocument::set(const std::string &key, ConfigValue value, size_t line) {
    entries_[key] = ConfigEntry{std::move(value), line};
}

void ConfigDocument::apply_override(std::string_view assignment) {
    size_t eq = assignment.find('=');
    if (eq == std::string_view::npos) {
        throw ConfigError(source_, 0, std::string(assignment), "override must have the form key=value");
    }
    std::string key(trim(assignment.substr(0, eq)));
    std::string_view text = trim(assignment.substr(eq + 1));
    if (key.empty() || !std::all_of(key.begin(), key.end(), is_key_char)) {
        throw ConfigError(source_, 0, key, "invalid override key");
    }
    auto sink = [&](const std::string &k, ConfigValue v) {
        set(k, std::move(v), 0);
    };
    try {
        parse_assignment_value(key, text, sink);
    } catch (const std::invalid_argument &e) {
        bool bare = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
        });
        if (!bare) {
            throw ConfigError(source_, 0, key, e.what());
        }
        set(key, ConfigValue(std::string(text)), 0);
    }
}

ConfigDocument parse_config(std::string_view text, std::string source) {
    ConfigDocument doc(std::move(source));
    std::string section;
    std::istringstream in{std::string(text)};
    std::string raw;
    size_t line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        std::string stripped = strip_comment(raw);
        std::string_view line = trim(stripped);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                throw ConfigError(doc.source(), line_no, "", "malformed section header");
            }
            std::string name(trim(line.substr(1, line.size() - 2)));
            if (name.empty() || !std::all_of(name.begin(), name.end(), is_key_char)) {
                throw ConfigError(doc.source(), line_no, name, "invalid section name");
            }
            section = name;
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(doc.source(), line_no, "", "expected 'key = value'");
        }
        std::string key(trim(line.substr(0, eq)));
        if (key.empty() || !std::all_of(key.begin(), key.end(), is_key_char)) {
            throw ConfigError(doc.source(), line_no, key, "invalid key");
        }
        if (!section.empty()) {
            key = section + "." + key;
        }
        try {
            parse_assignment_value(key, line.substr(eq + 1), [&](const std::string &k, ConfigValue v) {
                doc.insert(k, std::move(v), line_no);
            });
        } catch (const std::invalid_argument &e) {
            throw ConfigError(doc.source(), line_no, key, e.what());
        }
    }
    return doc;
}

ConfigDocument load_config_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path, 0, "", "cannot open config file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

namespace {

const std::set<std::string> &known_keys() {
    static const std::set<std::string> keys{
        "name",          "seed",         "group",          "lattice",     "links",        "sites",
        "dimension_cap", "steps",        "trajectories",   "mode",        "force_nontrivial",
        "word.generators", "word.length", "drift.kind",    "drift.epsilon", "drift.amplitude",
        "drift.seed",    "drift.sampling", "hamiltonian",  "dt",          "initial_state", "step_order",
    };
    return keys;
}

class Reader {
   public:
    explicit Reader(const ConfigDocument &doc) : doc_(doc) {
    }

    [[noreturn]] void fail(const std::string &key, const std::string &message) const {
        const ConfigEntry *e = doc_.find(key);
        throw ConfigError(doc_.source(), e ? e->line : 0, key, message);
    }

    const ConfigValue *get(const std::string &key) const {
        const ConfigEntry *e = doc_.find(key);
        return e ? &e->value : nullptr;
    }

    const ConfigValue &require(const std::string &key) const {
        const ConfigValue *v = get(key);
        if (!v) {
            throw ConfigError(doc_.source(), 0, key, "required key is missing");
        }
        return *v;
    }

    int64_t integer(const std::string &key, const ConfigValue &v, int64_t min) const {
        if (!v.is_integer()) {
            fail(key, "expected an integer, got " + v.to_literal());
        }
        int64_t x = std::get<int64_t>(v.data());
        if (x < min) {
            fail(key, "must be at least " + std::to_string(min));
        }
        return x;
    }
    int64_t integer(const std::string &key, int64_t fallback, int64_t min = 0) const {
        const ConfigValue *v = get(key);
        return v ? integer(key, *v, min) : fallback;
    }
    int64_t required_integer(const std::string &key, int64_t min = 0) const {
        return integer(key, require(key), min);
    }

    double number(const std::string &key, const ConfigValue &v) const {
        if (v.is_integer()) {
            return static_cast<double>(std::get<int64_t>(v.data()));
        }
        if (!std::holds_alternative<double>(v.data())) {
            fail(key, "expected a number, got " + v.to_literal());
        }
        return std::get<double>(v.data());
    }
    double required_number(const std::string &key) const {
        return number(key, require(key));
    }
    double number(const std::string &key, double fallback) const {
        const ConfigValue *v = get(key);
        return v ? number(key, *v) : fallback;
    }

    std::string string(const std::string &key, const ConfigValue &v) const {
        if (!v.is_string()) {
            fail(key, "expected a string, got " + v.to_literal());
        }
        return std::get<std::string>(v.data());
    }
    std::string string(const std::string &key, const std::string &fallback) const {
        const ConfigValue *v = get(key);
        return v ? string(key, *v) : fallback;
    }

    bool boolean(const std::string &key, bool fallback) const {
        const ConfigValue *v = get(key);
        if (!v) {
            return fallback;
        }
        if (!v->is_bool()) {
            fail(key, "expected true or false, got " + v->to_literal());
        }
        return std::get<bool>(v->data());
    }

    const ConfigValue::Array &array(const std::string &key, const ConfigValue &v) const {
        if (!v.is_array()) {
            fail(key, "expected an array, got " + v.to_literal());
        }
        return std::get<ConfigValue::Array>(v.data());
    }

   private:
    const ConfigDocument &doc_;
};

}  // namespace

ExperimentConfig experiment_from_config(const ConfigDocument &doc) {
    Reader r(doc);
    for (const auto &[key, entry] : doc.entries()) {
        if (!known_keys().count(key)) {
            throw ConfigError(doc.source(), entry.line, key, "unknown key");
        }
    }

    auto wrap = [&](const std::string &key, auto &&fn) {
        try {
            return fn();
        } catch (const std::invalid_argument &e) {
            r.fail(key, e.what());
        } catch (const std::out_of_range &e) {
            r.fail(key, e.what());
        }
    };

    uint64_t seed = static_cast<uint64_t>(r.required_integer("seed"));
    std::string group_name = r.string("group", r.require("group"));
    FiniteGroup group = wrap("group", [&] { return group_from_name(group_name); });
    size_t cap = static_cast<size_t>(r.integer("dimension_cap", static_cast<int64_t>(kDefaultDimensionCap), 1));

    std::optional<LatticeModel> model;
    if (const ConfigValue *links_value = r.get("links")) {
        if (r.get("lattice")) {
            r.fail("lattice", "give either 'lattice' or 'links', not both");
        }
        std::vector<Link> links;
        size_t max_site = 0;
        for (const ConfigValue &item : r.array("links", *links_value)) {
            const auto &pair = r.array("links", item);
            if (pair.size() != 2) {
                r.fail("links", "each link must be [tail, head]");
            }
            size_t tail = static_cast<size_t>(r.integer("links", pair[0], 0));
            size_t head = static_cast<size_t>(r.integer("links", pair[1], 0));
            max_site = std::max({max_site, tail, head});
            links.push_back(Link{tail, head});
        }
        size_t sites = static_cast<size_t>(r.integer("sites", links.empty() ? 1 : static_cast<int64_t>(max_site + 1), 1));
        model = wrap("links", [&] { return LatticeModel(group, sites, links, cap); });
    } else {
        std::string lattice = r.string("lattice", "two-link-plaquette");
        if (lattice != "two-link-plaquette") {
            r.fail("lattice", "unknown lattice '" + lattice + "' (expected two-link-plaquette or an explicit 'links' list)");
        }
        if (r.get("sites")) {
            r.fail("sites", "'sites' only applies to an explicit 'links' list");
        }
        model = LatticeModel::two_link_plaquette(group, cap);
    }

    ExperimentConfig cfg(std::move(*model));
    cfg.seed = seed;
    cfg.steps = static_cast<size_t>(r.required_integer("steps", 1));
    cfg.trajectories = static_cast<size_t>(r.integer("trajectories", 1, 1));
    cfg.mode = wrap("mode", [&] { return mitigation_mode_from_string(r.string("mode", "none")); });
    cfg.force_nontrivial = r.boolean("force_nontrivial", false);

    if (const ConfigValue *gens = r.get("word.generators")) {
        for (const ConfigValue &g : r.array("word.generators", *gens)) {
            auto index = r.integer("word.generators", g, 0);
            if (static_cast<size_t>(index) >= cfg.model.group().order()) {
                r.fail("word.generators", "element " + std::to_string(index) + " is not in group " + group_name);
            }
            cfg.word_generators.push_back(GroupElement{static_cast<uint32_t>(index)});
        }
    }
    cfg.word_length = static_cast<size_t>(r.integer("word.length", 0, 0));
    if (cfg.mode == MitigationMode::kWord) {
        if (cfg.word_generators.empty()) {
            r.fail("word.generators", "mode 'word' needs a non-empty generator list");
        }
        if (!r.get("word.length")) {
            r.fail("word.length", "mode 'word' needs a word length");
        }
        wrap("word.generators", [&] { return WordSampler(cfg.model.group(), cfg.word_generators, cfg.word_length); });
    }

    std::string kind = r.string("drift.kind", r.require("drift.kind"));
    if (kind == "z2_rotation") {
        cfg.drift.kind = Z2RotationDrift{r.required_number("drift.epsilon")};
    } else if (kind == "random_hermitian") {
        RandomHermitianDrift rh;
        rh.amplitude = r.required_number("drift.amplitude");
        rh.seed = static_cast<uint64_t>(r.integer("drift.seed", 0, 0));
        cfg.drift.kind = rh;
    } else {
        r.fail("drift.kind", "unknown drift kind '" + kind + "' (expected z2_rotation or random_hermitian)");
    }
    cfg.drift.sampling =
        wrap("drift.sampling", [&] { return drift_sampling_from_string(r.string("drift.sampling", "per_experiment")); });
    wrap(r.get("drift.epsilon") ? "drift.epsilon" : "drift.amplitude", [&] {
        cfg.drift.validate();
        return 0;
    });

    std::string hamiltonian = r.string("hamiltonian", "none");
    if (hamiltonian == "z2_two_link") {
        if (cfg.model.dim() != 4) {
            r.fail("hamiltonian", "z2_two_link needs the Z2 two-link model");
        }
        cfg.hamiltonian = z2_two_link_hamiltonian();
        cfg.dt = r.required_number("dt");
    } else if (hamiltonian != "none") {
        r.fail("hamiltonian", "unknown hamiltonian '" + hamiltonian + "' (expected none or z2_two_link)");
    } else if (r.get("dt")) {
        cfg.dt = r.number("dt", 0.0);
    }

    cfg.initial_state = static_cast<size_t>(r.integer("initial_state", 0, 0));

    if (const ConfigValue *order = r.get("step_order")) {
        const auto &items = r.array("step_order", *order);
        if (items.size() != 3) {
            r.fail("step_order", "must list hamiltonian, drift and gauge exactly once");
        }
        for (size_t i = 0; i < 3; i++) {
            cfg.order[i] = wrap("step_order", [&] { return step_stage_from_string(r.string("step_order", items[i])); });
        }
    }

    wrap("", [&] {
        cfg.validate();
        return 0;
    });
    return cfg;
}

}  // namespace gaugedrift
