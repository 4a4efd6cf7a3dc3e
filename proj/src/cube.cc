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

#include "cubemr/cube.h"

#include <algorithm>

#include "cubemr/error.h"

namespace cubemr {

namespace {

bool KeyLess(const SegmentRecord& a, const SegmentRecord& b) {
  return a.key < b.key;
}

}  // namespace

Cube Cube::FromRecords(std::vector<SegmentRecord> records) {
  std::sort(records.begin(), records.end(), KeyLess);
  for (size_t i = 1; i < records.size(); ++i) {
    if (records[i - 1].key == records[i].key) {
      throw InvalidArgument("duplicate segment key in cube records");
    }
  }
  Cube cube;
  cube.entries_ = std::move(records);
  return cube;
}

Cube Cube::Aggregate(std::vector<SegmentRecord> records) {
  std::sort(records.begin(), records.end(), KeyLess);
  size_t out = 0;
  for (size_t i = 0; i < records.size(); ++i) {
    if (out > 0 && records[out - 1].key == records[i].key) {
      records[out - 1].count =
          CheckedAdd(records[out - 1].count, records[i].count);
    } else {
      if (out != i) records[out] = std::move(records[i]);
      ++out;
    }
  }
  records.resize(out);
  Cube cube;
  cube.entries_ = std::move(records);
  return cube;
}

std::optional<Count> Cube::Find(const SegmentKey& key) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), key,
      [](const SegmentRecord& r, const SegmentKey& k) { return r.key < k; });
  if (it == entries_.end() || it->key != key) return std::nullopt;
  return it->count;
}

}  // namespace cubemr
