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

#ifndef GAUGEDRIFT_CSV_H
#define GAUGEDRIFT_CSV_H

#include <string>
#include <string_view>
#include <vector>

namespace gaugedrift {

/// Locale-independent, round-trip formatting: 17 significant digits, "nan"
/// for NaN.
std::string format_double(double v);
/// Inverse of format_double. Throws std::invalid_argument.
double parse_double(std::string_view text);

/// A CSV table with a header row. Fields are quoted only when needed.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column index by name; throws std::out_of_range if absent.
    size_t column(std::string_view name) const;

    std::string to_string() const;
};

/// Parses RFC-4180 text. Throws std::invalid_argument on ragged rows.
CsvTable parse_csv(std::string_view text);

CsvTable read_csv_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view contents);

}  // namespace gaugedrift

#endif
