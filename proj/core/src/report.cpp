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


#include "slopekit/report.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace slopekit::report {

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + name + "' (expected csv or json)");
}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("row width does not match the header of " + title);
  rows.push_back(std::move(row));
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

nlohmann::ordered_json cell_json(const std::string& s) {
  long long v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc() && end == s.data() + s.size() && !s.empty()) return v;
  if (s == "true") return true;
  if (s == "false") return false;
  return s;
}

nlohmann::ordered_json to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["title"] = t.title;
  j["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json o;
    for (std::size_t i = 0; i < t.columns.size(); ++i) o[t.columns[i]] = cell_json(r[i]);
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  j["notes"] = t.notes;
  return j;
}

void write_csv(std::ostream& os, const Table& t) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (std::find(t.json_only.begin(), t.json_only.end(), t.columns[i]) == t.json_only.end()) keep.push_back(i);
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t n = 0; n < keep.size(); ++n) {
      if (n > 0) os << ',';
      os << csv_cell(cells[keep[n]]);
    }
    os << '\n';
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
  for (const auto& n : t.notes) os << "# " << n << '\n';
}

}  // namespace

void write(std::ostream& os, const Table& t, Format f) {
  if (f == Format::csv) {
    write_csv(os, t);
  } else {
    os << to_json(t).dump(2) << '\n';
  }
}

void write(std::ostream& os, const std::vector<Table>& ts, Format f) {
  if (f == Format::csv) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (i > 0) os << '\n';
      write_csv(os, ts[i]);
    }
    return;
  }
  auto arr = nlohmann::ordered_json::array();
  for (const auto& t : ts) arr.push_back(to_json(t));
  os << arr.dump(2) << '\n';
}

}  // namespace slopekit::report
