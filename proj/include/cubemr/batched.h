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

#ifndef CUBEMR_BATCHED_H_
#define CUBEMR_BATCHED_H_

// Batched engine. Columns are split into g groups G_g..G_1 (G_g leftmost).
// Phase i shuffles every segment by its cells outside G_i, so the reducer
// for one shuffle key sees all G_i-concrete segments sharing those cells and
// materializes G_i locally, level by level, from primary children.
//
// Phase i input:  concrete in G_g..G_i,     anything in G_{i-1}..G_1.
// Phase i output: concrete in G_g..G_{i+1}, anything in G_i..G_1.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cubemr/materialization.h"

namespace cubemr {

// Half-open column range.
struct ColumnRange {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  friend bool operator==(const ColumnRange&, const ColumnRange&) = default;
};

class Grouping {
 public:
  Grouping() = default;
  // Ranges listed left to right, i.e. G_g first. Checked by PlanPhases.
  explicit Grouping(std::vector<ColumnRange> ranges)
      : ranges_(std::move(ranges)) {}

  // One group holding every column.
  static Grouping Single(const Schema& schema);

  // Groups named by dimension, G_g first. Throws CubeError(kInvalidArgument)
  // for unknown, repeated, missing or out-of-order dimensions.
  static Grouping FromDimensionNames(
      const Schema& schema,
      const std::vector<std::vector<std::string>>& groups);

  size_t num_groups() const { return ranges_.size(); }
  // G_i for i in [1, g].
  const ColumnRange& group(size_t i) const {
    return ranges_[ranges_.size() - i];
  }
  const std::vector<ColumnRange>& ranges() const { return ranges_; }

 private:
  std::vector<ColumnRange> ranges_;
};

struct PhasePlan {
  size_t phase = 0;
  ColumnRange group;
  // Columns [0, n) are concrete in every input / output segment.
  size_t input_concrete_columns = 0;
  size_t output_concrete_columns = 0;
  // The dimensions inside `group`, as a schema of their own.
  Schema group_schema;
  size_t num_columns = 0;
};

// Throws CubeError(kInvalidArgument) unless the groups are non-empty,
// contiguous, cover every column in order, and never split a dimension.
std::vector<PhasePlan> PlanPhases(const Schema& schema,
                                  const Grouping& grouping);

// A shuffle value: the G_i cells of a segment plus its count.
struct GroupValue {
  SegmentKey cells;
  Count count = 0;

  friend auto operator<=>(const GroupValue&, const GroupValue&) = default;
  friend bool operator==(const GroupValue&, const GroupValue&) = default;
};

struct ShuffleRecord {
  SegmentKey key;  // every cell outside G_i
  GroupValue value;
};

// Splits a phase input segment into shuffle key and value. Throws
// CubeError(kShape) if the segment does not match the phase input shape.
ShuffleRecord MapPhase(const PhasePlan& plan, const SegmentKey& segment,
                       Count count);

// Inverse of MapPhase's split.
SegmentKey JoinShuffleKey(const PhasePlan& plan, const SegmentKey& shuffle_key,
                          const SegmentKey& group_cells);

struct ReduceOutput {
  std::vector<SegmentRecord> segments;
  uint64_t local_msgs = 0;
};

// Local materialization of G_i under one shuffle key. Level 0 merges the
// incoming values; level k is built from level k-1 by one copy-add per
// (entry, G_i-restricted primary parent), each counted as a local message.
// Every level is written once, after it is complete, in key order.
ReduceOutput ReducePhase(const PhasePlan& plan, const SegmentKey& shuffle_key,
                         std::span<const GroupValue> values);

// Runs phases 1..g on the simulator. Phase i's stats carry index i.
Materialization BatchedMaterialize(const Schema& schema,
                                   const Grouping& grouping,
                                   std::span<const Row> rows,
                                   const SimConfig& config,
                                   const PhaseObserver& observer = {});

}  // namespace cubemr

#endif  // CUBEMR_BATCHED_H_
