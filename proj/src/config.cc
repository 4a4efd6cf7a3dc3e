// Copyright 2026 The cubemr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cubemr/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "cubemr/dataset_io.h"
#include "cubemr/error.h"

namespace cubemr {

namespace {

std::vector<std::string> Words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

std::string Trim(const std::string& s) {
  const size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const size_t last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
bool ParseNumber(const std::string& text, T* out) {
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, *out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

CubeConfig ParseConfig(const std::string& text, const std::string& source) {
  enum class Section { kNone, kMetric, kDimensions, kGrouping, kCardinality, kSkew };
  Section section = Section::kNone;
  std::set<std::string> seen_sections;
  std::string metric;
  std::vector<Dimension> dimensions;
  CubeConfig config;
  bool has_grouping = false;

  std::istringstream in(text);
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto fail = [&](const std::string& message) {
      return ParseError(source + ":" + std::to_string(line_no) + ": " + message);
    };
    const std::string line = Trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw fail("unterminated section header");
      const std::string name = Trim(line.substr(1, line.size() - 2));
      if (!seen_sections.insert(name).second) {
        throw fail("section [" + name + "] appears twice");
      }
      if (name == "metric") section = Section::kMetric;
      else if (name == "dimensions") section = Section::kDimensions;
      else if (name == "grouping") section = Section::kGrouping;
      else if (name == "cardinality") section = Section::kCardinality;
      else if (name == "skew") section = Section::kSkew;
      else throw fail("unknown section [" + name + "]");
      if (section == Section::kGrouping) has_grouping = true;
      continue;
    }

    std::string key;
    std::vector<std::string> values;
    if (section == Section::kDimensions || section == Section::kCardinality ||
        section == Section::kSkew) {
      const size_t eq = line.find('=');
      if (eq == std::string::npos) throw fail("expected 'name = value'");
      key = Trim(line.substr(0, eq));
      values = Words(line.substr(eq + 1));
      if (key.empty() || Words(key).size() != 1) throw fail("bad name '" + key + "'");
      if (values.empty()) throw fail("missing value for '" + key + "'");
    }

    switch (section) {
      case Section::kNone:
        throw fail("line outside of any section");
      case Section::kMetric: {
        const std::vector<std::string> words = Words(line);
        if (words.size() != 1 || !metric.empty()) {
          throw fail("[metric] holds exactly one name");
        }
        metric = words[0];
        break;
      }
      case Section::kDimensions:
        for (const std::string& column : values) {
          if (column == kAllCell) throw fail("'*' is not a column name");
        }
        dimensions.push_back({key, values});
        break;
      case Section::kGrouping:
        config.group_names.push_back(Words(line));
        break;
      case Section::kCardinality: {
        uint64_t n = 0;
        if (values.size() != 1 || !ParseNumber(values[0], &n)) {
          throw fail("cardinality must be one positive integer");
        }
        if (n == 0) throw fail("cardinality must be at least 1");
        if (!config.cardinality.emplace(key, n).second) {
          throw fail("cardinality for '" + key + "' given twice");
        }
        break;
      }
      case Section::kSkew: {
        double s = 0;
        if (values.size() != 1 || !ParseNumber(values[0], &s)) {
          throw fail("skew must be one number");
        }
        if (!std::isfinite(s) || s < 0) throw fail("skew must be >= 0");
        if (!config.skew.emplace(key, s).second) {
          throw fail("skew for '" + key + "' given twice");
        }
        break;
      }
    }
  }

  if (metric.empty()) throw ParseError(source + ": missing [metric] section");
  if (dimensions.empty()) {
    throw ParseError(source + ": missing or empty [dimensions] section");
  }
  try {
    config.schema = Schema::Make(std::move(dimensions), metric);
    if (has_grouping) {
      config.grouping =
          Grouping::FromDimensionNames(config.schema, config.group_names);
    } else {
      config.grouping = Grouping::Single(config.schema);
    }
    PlanPhases(config.schema, config.grouping);
    const std::vector<std::string> columns = config.schema.column_names();
    for (const auto& [column, n] : config.cardinality) {
      if (std::find(columns.begin(), columns.end(), column) == columns.end()) {
        throw InvalidArgument("[cardinality] names unknown column '" + column + "'");
      }
    }
    for (const auto& [dimension, s] : config.skew) {
      if (!config.schema.FindDimension(dimension)) {
        throw InvalidArgument("[skew] names unknown dimension '" + dimension + "'");
      }
    }
  } catch (const CubeError& e) {
    throw CubeError(e.code(), source + ": " + e.what());
  }
  return config;
}

CubeConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfig(text.str(), path);
}

}  // namespace cubemr
