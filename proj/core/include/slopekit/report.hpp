// Copyright 2026 The slopekit Authors
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


#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace slopekit::report {

enum class Format { csv, json };

Format parse_format(const std::string& name);

/// A rectangular table of exact values already rendered as text (integers or
/// num/den). Columns listed in `json_only` are dropped from CSV output.
struct Table {
  Table() = default;
  Table(std::string t, std::vector<std::string> cols) : title(std::move(t)), columns(std::move(cols)) {}

  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> json_only;
  std::vector<std::string> notes;

  void add_row(std::vector<std::string> row);
};

/// CSV: header, rows, then notes as "# " lines. JSON: one object with
/// "title", "columns", "rows" (objects keyed by column) and "notes".
/// Integer-looking cells become JSON numbers when they fit in 64 bits.
void write(std::ostream& os, const Table& t, Format f);

/// Several tables; JSON output is an array.
void write(std::ostream& os, const std::vector<Table>& ts, Format f);

}  // namespace slopekit::report
