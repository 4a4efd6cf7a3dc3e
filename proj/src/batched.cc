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

#include "cubemr/batched.h"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <utility>

#include "cubemr/error.h"
#include "cubemr/lattice.h"

namespace cubemr {

Grouping Grouping::Single(const Schema& schema) {
  return Grouping({ColumnRange{0, schema.num_columns()}});
}

Grouping Grouping::FromDimensionNames(
    const Schema& schema, const std::vector<std::vector<std::string>>& groups) {
  std::vector<ColumnRange> ranges;
  std::set<size_t> seen;
  size_t next_dimension = 0;
  for (const std::vector<std::string>& names : groups) {
    if (names.empty()) throw InvalidArgument("empty group in grouping");
    std::vector<size_t> dims;
    for (const std::string& name : names) {
      const std::optional<size_t> d = schema.FindDimension(name);
      if (!d) throw InvalidArgument("grouping names unknown dimension '" + name + "'");
      if (!seen.insert(*d).second) {
        throw InvalidArgument("dimension '" + name +
                              "' appears in more than one group");
      }
      dims.push_back(*d);
    }
    std::sort(dims.begin(), dims.end());
    for (size_t k = 0; k < dims.size(); ++k) {
      if (dims[k] != next_dimension + k) {
        throw InvalidArgument(
            "grouping does not follow the schema's dimension order at '" +
            schema.dimension(dims[k]).name + "'");
      }
    }
    ranges.push_back({schema.dimension_begin(dims.front()),
                      schema.dimension_end(dims.back())});
    next_dimension += dims.size();
  }
  if (next_dimension != schema.num_dimensions()) {
    throw InvalidArgument("grouping leaves dimension '" +
                          schema.dimension(next_dimension).name +
                          "' unassigned");
  }
  return Grouping(std::move(ranges));
}

std::vector<PhasePlan> PlanPhases(const Schema& schema,
                                  const Grouping& grouping) {
  const std::vector<ColumnRange>& ranges = grouping.ranges();
  if (ranges.empty()) throw InvalidArgument("grouping has no groups");
  size_t expected_begin = 0;
  for (const ColumnRange& r : ranges) {
    if (r.begin != expected_begin || r.end <= r.begin) {
      throw InvalidArgument(
          "groups must be non-empty and follow the column order");
    }
    expected_begin = r.end;
  }
  if (expected_begin != schema.num_columns()) {
    throw InvalidArgument("grouping does not cover every column");
  }
  for (size_t d = 0; d < schema.num_dimensions(); ++d) {
    const size_t first = schema.dimension_begin(d);
    const size_t last = schema.dimension_end(d) - 1;
    for (const ColumnRange& r : ranges) {
      const bool has_first = first >= r.begin && first < r.end;
      const bool has_last = last >= r.begin && last < r.end;
      if (has_first != has_last) {
        throw InvalidArgument("dimension '" + schema.dimension(d).name +
                              "' is split across groups");
      }
    }
  }

  const size_t g = ranges.size();
  std::vector<PhasePlan> plans;
  plans.reserve(g);
  for (size_t i = 1; i <= g; ++i) {
    PhasePlan plan;
    plan.phase = i;
    plan.group = grouping.group(i);
    plan.input_concrete_columns = plan.group.end;
    plan.output_concrete_columns = plan.group.begin;
    plan.group_schema =
        schema.Slice(schema.dimension_of_column(plan.group.begin),
                     schema.dimension_of_column(plan.group.end - 1) + 1);
    plan.num_columns = schema.num_columns();
    plans.push_back(std::move(plan));
  }
  return plans;
}

ShuffleRecord MapPhase(const PhasePlan& plan, const SegmentKey& segment,
                       Count count) {
  if (segment.size() != plan.num_columns) {
    throw CubeError(CubeError::Code::kShape,
                    "segment width does not match the schema");
  }
  for (size_t c = 0; c < plan.input_concrete_columns; ++c) {
    if (segment[c] == kAll) {
      throw CubeError(CubeError::Code::kShape,
                      "segment is not concrete in the groups phase " +
                          std::to_string(plan.phase) + " requires");
    }
  }
  const ColumnRange g = plan.group;
  ShuffleRecord out;
  out.key = SegmentKey(plan.num_columns - g.size());
  for (size_t c = 0; c < g.begin; ++c) out.key[c] = segment[c];
  for (size_t c = g.end; c < plan.num_columns; ++c) {
    out.key[c - g.size()] = segment[c];
  }
  out.value.cells = SegmentKey(segment.cells().subspan(g.begin, g.size()));
  out.value.count = count;
  return out;
}

SegmentKey JoinShuffleKey(const PhasePlan& plan, const SegmentKey& shuffle_key,
                          const SegmentKey& group_cells) {
  const ColumnRange g = plan.group;
  SegmentKey full(plan.num_columns);
  for (size_t c = 0; c < g.begin; ++c) full[c] = shuffle_key[c];
  for (size_t c = 0; c < g.size(); ++c) full[g.begin + c] = group_cells[c];
  for (size_t c = g.end; c < plan.num_columns; ++c) {
    full[c] = shuffle_key[c - g.size()];
  }
  return full;
}

ReduceOutput ReducePhase(const PhasePlan& plan, const SegmentKey& shuffle_key,
                         std::span<const GroupValue> values) {
  using Level = std::unordered_map<SegmentKey, Count, SegmentKeyHash>;
  const size_t width = plan.group.size();
  std::vector<Level> levels(width + 1);

  for (const GroupValue& v : values) {
    if (v.cells.size() != width || !v.cells.fully_concrete()) {
      throw CubeError(CubeError::Code::kShape,
                      "reducer value is not concrete in its group");
    }
    auto [it, inserted] = levels[0].try_emplace(v.cells, v.count);
    if (!inserted) it->second = CheckedAdd(it->second, v.count);
  }

  ReduceOutput out;
  for (size_t k = 1; k <= width; ++k) {
    Level& next = levels[k];
    for (const auto& [cells, count] : levels[k - 1]) {
      ForEachPrimaryParent(plan.group_schema, cells, [&](size_t pos) {
        auto [it, inserted] = next.try_emplace(cells.With(pos, kAll), count);
        if (!inserted) it->second = CheckedAdd(it->second, count);
        ++out.local_msgs;
      });
    }
  }

  std::vector<std::pair<SegmentKey, Count>> sorted;
  for (Level& level : levels) {
    sorted.assign(level.begin(), level.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [cells, count] : sorted) {
      out.segments.push_back({JoinShuffleKey(plan, shuffle_key, cells), count});
    }
  }
  return out;
}

Materialization BatchedMaterialize(const Schema& schema,
                                   const Grouping& grouping,
                                   std::span<const Row> rows,
                                   const SimConfig& config,
                                   const PhaseObserver& observer) {
  config.Validate();
  const std::vector<PhasePlan> plans = PlanPhases(schema, grouping);
  Materialization result;
  result.stats.algorithm = "batched";

  SegmentStore store = LoadRows(schema, rows, config.spill_threshold);
  for (const PhasePlan& plan : plans) {
    auto mapper = [&plan](const SegmentKey& segment, Count count,
                          Emitter<GroupValue>& out) {
      ShuffleRecord record = MapPhase(plan, segment, count);
      out.Emit(std::move(record.key), std::move(record.value));
    };
    auto reducer = [&plan](const SegmentKey& key,
                           std::span<const GroupValue> values,
                           ReduceContext& ctx) {
      ReduceOutput out = ReducePhase(plan, key, values);
      ctx.AddLocalMessages(out.local_msgs);
      for (SegmentRecord& r : out.segments) {
        ctx.Emit(std::move(r.key), r.count);
      }
    };
    PhaseStats stats;
    SegmentStore next = RunMapReduce<GroupValue>(store, mapper, reducer,
                                                 config, plan.phase, &stats);
    if (observer) observer(stats, store, next);
    result.stats.phases.push_back(std::move(stats));
    store = std::move(next);
  }
  result.cube = Cube::FromRecords(std::move(store).TakeAll());
  return result;
}

}  // namespace cubemr
