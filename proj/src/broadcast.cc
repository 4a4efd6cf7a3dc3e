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

#include "cubemr/broadcast.h"

#include <string>
#include <unordered_map>

#include "cubemr/error.h"
#include "cubemr/lattice.h"

namespace cubemr {

Materialization BroadcastMaterialize(const Schema& schema,
                                     std::span<const Row> rows) {
  std::unordered_map<SegmentKey, Count, SegmentKeyHash> sums;
  for (size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    if (row.key.size() != schema.num_columns() || !row.key.fully_concrete()) {
      throw CubeError(CubeError::Code::kShape,
                      "input row " + std::to_string(i) +
                          " is not a fully concrete key");
    }
    for (SegmentKey& segment : EnumerateSegments(schema, row.key)) {
      auto [it, inserted] = sums.try_emplace(std::move(segment), row.count);
      if (!inserted) it->second = CheckedAdd(it->second, row.count);
    }
  }

  std::vector<SegmentRecord> records;
  records.reserve(sums.size());
  for (auto& [key, count] : sums) records.push_back({key, count});
  sums.clear();

  Materialization result;
  result.cube = Cube::FromRecords(std::move(records));
  PhaseStats phase;
  phase.phase = 1;
  phase.input_rows = rows.size();
  phase.remote_msgs = rows.size() * (SegmentsPerRow(schema) - 1);
  phase.output_rows = result.cube.size();
  phase.max_output_rows_per_key = result.cube.empty() ? 0 : 1;
  result.stats.algorithm = "broadcast";
  result.stats.phases.push_back(std::move(phase));
  return result;
}

}  // namespace cubemr
