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

#include "cubemr/materialization.h"

#include <string>

#include "cubemr/error.h"

namespace cubemr {

SegmentStore LoadRows(const Schema& schema, std::span<const Row> rows,
                      size_t spill_threshold) {
  SegmentStore store(spill_threshold);
  for (size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    if (row.key.size() != schema.num_columns() || !row.key.fully_concrete()) {
      throw CubeError(CubeError::Code::kShape,
                      "input row " + std::to_string(i) +
                          " is not a fully concrete key of width " +
                          std::to_string(schema.num_columns()));
    }
    store.Append({row.key, row.count});
  }
  return store;
}

}  // namespace cubemr
