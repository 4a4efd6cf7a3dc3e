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

#include "cubemr/dataset_io.h"

#include <charconv>
#include <fstream>

#include "cubemr/error.h"

namespace cubemr {

std::string EncodeCell(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char ch : value) {
    switch (ch) {
      case '\t':
      case '\n':
      case '\r':
        throw InvalidArgument("value contains a tab or line break");
      case '\\':
        out += "\\\\";
        break;
      case '*':
        out += "\\*";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

std::optional<std::string> DecodeCell(std::string_view cell) {
  if (cell == kAllCell) return std::nullopt;
  std::string out;
  out.reserve(cell.size());
  for (size_t i = 0; i < cell.size(); ++i) {
    if (cell[i] != '\\') {
      out += cell[i];
      continue;
    }
    if (i + 1 == cell.size() || (cell[i + 1] != '\\' && cell[i + 1] != '*')) {
      throw ParseError("bad escape in cell '" + std::string(cell) + "'");
    }
    out += cell[++i];
  }
  return out;
}

std::vector<std::string_view> SplitTsvLine(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> cells;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

Count ParseCount(std::string_view cell) {
  Count value = 0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (!cell.empty() && cell.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (cell.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("metric '" + std::string(cell) +
                     "' is not a 64-bit integer");
  }
  return value;
}

std::string TsvHeader(const Schema& schema) {
  std::string header;
  for (const std::string& column : schema.column_names()) {
    header += column;
    header += '\t';
  }
  return header + schema.metric_name();
}

std::vector<Row> ReadDataset(const std::string& path, const Schema& schema,
                             ValueDictionary* dictionary) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset '" + path + "'");
  if (dictionary->num_columns() != schema.num_columns()) {
    *dictionary = ValueDictionary(schema.num_columns());
  }
  const size_t width = schema.num_columns();

  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(path + ": missing header line");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != TsvHeader(schema)) {
    throw ParseError(path + ":1: header does not match the schema (expected '" +
                     TsvHeader(schema) + "')");
  }

  std::vector<Row> rows;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto where = [&] { return path + ":" + std::to_string(line_no) + ": "; };
    const std::vector<std::string_view> cells = SplitTsvLine(line);
    if (cells.size() != width + 1) {
      throw ParseError(where() + "expected " + std::to_string(width + 1) +
                       " fields, found " + std::to_string(cells.size()));
    }
    Row row;
    row.key = SegmentKey(width);
    try {
      for (size_t c = 0; c < width; ++c) {
        const std::optional<std::string> value = DecodeCell(cells[c]);
        if (!value) {
          throw ParseError("'*' is not allowed in an input row (column " +
                           schema.column_names()[c] + ")");
        }
        row.key[c] = dictionary->Intern(c, *value);
      }
      row.count = ParseCount(cells[width]);
    } catch (const CubeError& e) {
      throw CubeError(e.code(), where() + e.what());
    }
    rows.push_back(std::move(row));
  }
  if (in.bad()) throw IoError("error reading '" + path + "'");

  const auto remap = dictionary->Canonicalize();
  for (Row& row : rows) RemapKey(remap, row.key);
  return rows;
}

void WriteDataset(const std::string& path, const Schema& schema,
                  const ValueDictionary& dictionary,
                  const std::vector<Row>& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create '" + path + "'");
  out << TsvHeader(schema) << '\n';
  std::string line;
  for (const Row& row : rows) {
    line.clear();
    for (size_t c = 0; c < row.key.size(); ++c) {
      line += EncodeCell(dictionary.Value(c, row.key[c]));
      line += '\t';
    }
    line += std::to_string(row.count);
    line += '\n';
    out << line;
  }
  out.flush();
  if (!out) throw IoError("error writing '" + path + "'");
}

}  // namespace cubemr
