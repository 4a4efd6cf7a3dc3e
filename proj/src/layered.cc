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

#include "cubemr/layered.h"

#include <utility>
#include <vector>

#include "cubemr/lattice.h"

namespace cubemr {

namespace {

void SumReducer(const SegmentKey& key, std::span<const Count> counts,
                ReduceContext& ctx) {
  Count sum = 0;
  for (Count c : counts) sum = CheckedAdd(sum, c);
  ctx.Emit(key, sum);
}

}  // namespace

Materialization LayeredMaterialize(const Schema& schema,
                                   std::span<const Row> rows,
                                   const SimConfig& config,
                                   const PhaseObserver& observer) {
  config.Validate();
  Materialization result;
  result.stats.algorithm = "layered";

  SegmentStore level = LoadRows(schema, rows, config.spill_threshold);
  if (level.empty()) return result;

  std::vector<SegmentRecord> all;
  auto run_round = [&](size_t round, auto&& mapper) {
    PhaseStats stats;
    SegmentStore next = RunMapReduce<Count>(level, mapper, SumReducer, config,
                                            round, &stats);
    if (observer) observer(stats, level, next);
    next.ForEach([&all](const SegmentRecord& r) { all.push_back(r); });
    result.stats.phases.push_back(std::move(stats));
    level = std::move(next);
  };

  run_round(0, [](const SegmentKey& key, Count count, Emitter<Count>& out) {
    out.Emit(key, count);
  });
  for (size_t round = 1; round <= schema.num_columns() && !level.empty();
       ++round) {
    run_round(round, [&schema](const SegmentKey& key, Count count,
                               Emitter<Count>& out) {
      ForEachPrimaryParent(schema, key, [&](size_t pos) {
        out.Emit(key.With(pos, kAll), count);
      });
    });
  }
  result.cube = Cube::FromRecords(std::move(all));
  return result;
}

}  // namespace cubemr
