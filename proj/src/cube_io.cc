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

#include "cubemr/cube_io.h"

#include <fstream>
#include <map>

#include "cubemr/dataset_io.h"
#include "cubemr/error.h"
#include "cubemr/lattice.h"

namespace cubemr {

namespace {

uint64_t Magnitude(Count c) {
  return c < 0 ? uint64_t{0} - static_cast<uint64_t>(c)
               : static_cast<uint64_t>(c);
}

struct RawCube {
  std::string header;
  std::map<TextKey, Count> entries;
};

RawCube ReadRawCube(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open cube '" + path + "'");
  RawCube raw;
  std::string line;
  if (!std::getline(in, raw.header)) {
    throw ParseError(path + ": missing header line");
  }
  if (!raw.header.empty() && raw.header.back() == '\r') raw.header.pop_back();
  const size_t fields = SplitTsvLine(raw.header).size();
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::string where = path + ":" + std::to_string(line_no) + ": ";
    const std::vector<std::string_view> cells = SplitTsvLine(line);
    if (cells.size() != fields) {
      throw ParseError(where + "expected " + std::to_string(fields) +
                       " fields, found " + std::to_string(cells.size()));
    }
    TextKey key;
    Count count = 0;
    try {
      for (size_t c = 0; c + 1 < fields; ++c) key.push_back(DecodeCell(cells[c]));
      count = ParseCount(cells.back());
    } catch (const CubeError& e) {
      throw CubeError(e.code(), where + e.what());
    }
    if (!raw.entries.emplace(std::move(key), count).second) {
      throw ParseError(where + "duplicate segment key");
    }
  }
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return raw;
}

}  // namespace

size_t WriteCube(const std::string& path, const Schema& schema,
                 const ValueDictionary& dictionary, const Cube& cube,
                 std::optional<Count> min_abs_count) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create '" + path + "'");
  out << TsvHeader(schema) << '\n';
  const uint64_t threshold = min_abs_count ? Magnitude(*min_abs_count) : 0;

  // Encoded values are cached per column; the same values repeat heavily.
  std::vector<std::vector<std::string>> encoded(schema.num_columns());
  for (size_t c = 0; c < schema.num_columns(); ++c) {
    encoded[c].resize(dictionary.size(c) + 1, std::string(kAllCell));
    for (ValueId id = 1; id <= dictionary.size(c); ++id) {
      encoded[c][id] = EncodeCell(dictionary.Value(c, id));
    }
  }

  size_t written = 0;
  std::string line;
  for (const SegmentRecord& r : cube.entries()) {
    if (min_abs_count && Magnitude(r.count) < threshold) continue;
    line.clear();
    for (size_t c = 0; c < r.key.size(); ++c) {
      if (r.key[c] > dictionary.size(c)) {
        throw InvalidArgument("segment value id outside the dictionary");
      }
      line += encoded[c][r.key[c]];
      line += '\t';
    }
    line += std::to_string(r.count);
    line += '\n';
    out << line;
    ++written;
  }
  out.flush();
  if (!out) throw IoError("error writing '" + path + "'");
  return written;
}

Cube ReadCube(const std::string& path, const Schema& schema,
              ValueDictionary* dictionary) {
  RawCube raw = ReadRawCube(path);
  if (raw.header != TsvHeader(schema)) {
    throw ParseError(path + ":1: header does not match the schema");
  }
  if (dictionary->num_columns() != schema.num_columns()) {
    *dictionary = ValueDictionary(schema.num_columns());
  }
  std::vector<SegmentRecord> records;
  records.reserve(raw.entries.size());
  for (const auto& [text, count] : raw.entries) {
    SegmentKey key(schema.num_columns());
    for (size_t c = 0; c < text.size(); ++c) {
      key[c] = text[c] ? dictionary->Intern(c, *text[c]) : kAll;
    }
    if (!IsValidSegment(schema, key)) {
      throw ParseError(path + ": segment " + FormatTextKey(text) +
                       " breaks the hierarchy constraint");
    }
    records.push_back({std::move(key), count});
  }
  const auto remap = dictionary->Canonicalize();
  for (SegmentRecord& r : records) RemapKey(remap, r.key);
  return Cube::FromRecords(std::move(records));
}

std::string FormatTextKey(const TextKey& key) {
  std::string out = "(";
  for (size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out += ", ";
    out += key[i] ? "\"" + *key[i] + "\"" : std::string("*");
  }
  return out + ")";
}

std::vector<Discrepancy> DiffCubes(const std::string& path_a,
                                   const std::string& path_b) {
  const RawCube a = ReadRawCube(path_a);
  const RawCube b = ReadRawCube(path_b);
  if (a.header != b.header) {
    throw InvalidArgument("cube headers differ: '" + a.header + "' vs '" +
                          b.header + "'");
  }
  std::vector<Discrepancy> out;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() || ib != b.entries.end()) {
    if (ib == b.entries.end() ||
        (ia != a.entries.end() && ia->first < ib->first)) {
      out.push_back({ia->first, ia->second, std::nullopt});
      ++ia;
    } else if (ia == a.entries.end() || ib->first < ia->first) {
      out.push_back({ib->first, std::nullopt, ib->second});
      ++ib;
    } else {
      if (ia->second != ib->second) {
        out.push_back({ia->first, ia->second, ib->second});
      }
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace cubemr
