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

#include "cubemr/dictionary.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "cubemr/error.h"

namespace cubemr {

ValueDictionary::ValueDictionary(size_t num_columns) : columns_(num_columns) {}

ValueId ValueDictionary::Intern(size_t column, std::string_view value) {
  Column& col = columns_.at(column);
  auto [it, inserted] = col.ids.try_emplace(
      std::string(value), static_cast<ValueId>(col.values.size() + 1));
  if (inserted) {
    if (col.values.size() + 1 == std::numeric_limits<ValueId>::max()) {
      throw InvalidArgument("too many distinct values in column");
    }
    col.values.emplace_back(value);
  }
  return it->second;
}

ValueId ValueDictionary::Find(size_t column, std::string_view value) const {
  const Column& col = columns_.at(column);
  auto it = col.ids.find(std::string(value));
  return it == col.ids.end() ? kAll : it->second;
}

const std::string& ValueDictionary::Value(size_t column, ValueId id) const {
  const Column& col = columns_.at(column);
  if (id == kAll || id > col.values.size()) {
    throw InvalidArgument("value id " + std::to_string(id) +
                          " is not a concrete value of column " +
                          std::to_string(column));
  }
  return col.values[id - 1];
}

std::vector<std::vector<ValueId>> ValueDictionary::Canonicalize() {
  std::vector<std::vector<ValueId>> remap(columns_.size());
  for (size_t c = 0; c < columns_.size(); ++c) {
    Column& col = columns_[c];
    std::vector<ValueId> order(col.values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&col](ValueId a, ValueId b) {
      return col.values[a] < col.values[b];
    });
    remap[c].assign(col.values.size() + 1, kAll);
    std::vector<std::string> sorted(col.values.size());
    for (size_t rank = 0; rank < order.size(); ++rank) {
      const ValueId new_id = static_cast<ValueId>(rank + 1);
      remap[c][order[rank] + 1] = new_id;
      sorted[rank] = std::move(col.values[order[rank]]);
    }
    col.values = std::move(sorted);
    for (auto& [value, id] : col.ids) id = remap[c][id];
  }
  return remap;
}

bool ValueDictionary::is_canonical() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Column& col) {
    return std::is_sorted(col.values.begin(), col.values.end());
  });
}

void RemapKey(const std::vector<std::vector<ValueId>>& remap,
              SegmentKey& key) {
  for (size_t c = 0; c < key.size(); ++c) key[c] = remap[c][key[c]];
}

}  // namespace cubemr
