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

#ifndef CUBEMR_DICTIONARY_H_
#define CUBEMR_DICTIONARY_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cubemr/segment_key.h"

namespace cubemr {

// Per-column text <-> dense id mapping. Ids start at 1 (0 is kAll).
class ValueDictionary {
 public:
  explicit ValueDictionary(size_t num_columns = 0);

  size_t num_columns() const { return columns_.size(); }
  size_t size(size_t column) const { return columns_[column].values.size(); }

  ValueId Intern(size_t column, std::string_view value);
  // Returns kAll when the value is unknown.
  ValueId Find(size_t column, std::string_view value) const;
  const std::string& Value(size_t column, ValueId id) const;

  // Renumbers every column so that id order equals byte order of the values.
  // Returns, per column, old id -> new id (index 0 maps kAll to itself).
  std::vector<std::vector<ValueId>> Canonicalize();

  bool is_canonical() const;

 private:
  struct Column {
    std::vector<std::string> values;  // values[id - 1]
    std::unordered_map<std::string, ValueId> ids;
  };
  std::vector<Column> columns_;
};

// Rewrites key cells through a remap returned by Canonicalize().
void RemapKey(const std::vector<std::vector<ValueId>>& remap, SegmentKey& key);

}  // namespace cubemr

#endif  // CUBEMR_DICTIONARY_H_
