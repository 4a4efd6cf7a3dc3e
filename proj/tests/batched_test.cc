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

#include <set>
#include <unordered_set>

#include "cubemr/broadcast.h"
#include "cubemr/error.h"
#include "cubemr/lattice.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace cubemr {
namespace {

using testing::MakeKey;

class BatchedTest : public ::testing::Test {
 protected:
  SegmentKey Key(const std::vector<std::string>& cells) {
    return MakeKey(&dictionary_, cells);
  }
  SegmentKey GroupKey(size_t first_column, const std::vector<std::string>& cells) {
    SegmentKey key(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) {
      key[i] = cells[i] == "*" ? kAll
                               : dictionary_.Intern(first_column + i, cells[i]);
    }
    return key;
  }

  // G_3 = region, G_2 = query_category, G_1 = advertiser.
  Grouping ThreeGroups() const {
    return Grouping::FromDimensionNames(
        schema_, {{"region"}, {"query_category"}, {"advertiser"}});
  }

  Schema schema_ = testing::AdsSchema();
  ValueDictionary dictionary_{5};
};

TEST_F(BatchedTest, PlansThreePhasesForThreeGroups) {
  const std::vector<PhasePlan> plans = PlanPhases(schema_, ThreeGroups());
  ASSERT_EQ(plans.size(), 3u);
  EXPECT_EQ(plans[0].group, (ColumnRange{4, 5}));
  EXPECT_EQ(plans[1].group, (ColumnRange{3, 4}));
  EXPECT_EQ(plans[2].group, (ColumnRange{0, 3}));
  EXPECT_EQ(plans[0].input_concrete_columns, 5u);
  EXPECT_EQ(plans[2].output_concrete_columns, 0u);
  for (size_t i = 0; i + 1 < plans.size(); ++i) {
    EXPECT_EQ(plans[i].output_concrete_columns,
              plans[i + 1].input_concrete_columns);
  }
  EXPECT_EQ(plans[2].group_schema.dimension(0).name, "region");
}

TEST_F(BatchedTest, SingleGroupIsOnePhase) {
  const std::vector<PhasePlan> plans =
      PlanPhases(schema_, Grouping::Single(schema_));
  ASSERT_EQ(plans.size(), 1u);
  EXPECT_EQ(plans[0].input_concrete_columns, 5u);
  EXPECT_EQ(plans[0].output_concrete_columns, 0u);
}

TEST_F(BatchedTest, RejectsBadGroupings) {
  // Splits region between country/state and city.
  EXPECT_THROW(PlanPhases(schema_, Grouping({{0, 2}, {2, 5}})), CubeError);
  EXPECT_THROW(PlanPhases(schema_, Grouping({{0, 3}, {4, 5}})), CubeError);
  EXPECT_THROW(PlanPhases(schema_, Grouping({{0, 3}, {3, 3}, {3, 5}})),
               CubeError);
  EXPECT_THROW(PlanPhases(schema_, Grouping(std::vector<ColumnRange>{})), CubeError);
  EXPECT_THROW(PlanPhases(schema_, Grouping({{0, 4}})), CubeError);
  EXPECT_THROW(Grouping::FromDimensionNames(
                   schema_, {{"advertiser"}, {"region", "query_category"}}),
               CubeError);
  EXPECT_THROW(Grouping::FromDimensionNames(
                   schema_, {{"region"}, {"region", "query_category"},
                             {"advertiser"}}),
               CubeError);
  EXPECT_THROW(Grouping::FromDimensionNames(schema_, {{"region"}}), CubeError);
  EXPECT_THROW(Grouping::FromDimensionNames(schema_, {{"region", "advertiser"},
                                                      {"query_category"}}),
               CubeError);
}

TEST_F(BatchedTest, MapPhaseSplitsOutTheGroup) {
  const std::vector<PhasePlan> plans = PlanPhases(schema_, ThreeGroups());
  const SegmentKey row = Key({"US", "CA", "Mtn View", "Retail", "Amazon"});

  const ShuffleRecord p2 = MapPhase(plans[1], row, 400);
  EXPECT_EQ(p2.key, (SegmentKey{row[0], row[1], row[2], row[4]}));
  EXPECT_EQ(p2.value.cells, GroupKey(3, {"Retail"}));
  EXPECT_EQ(p2.value.count, 400);
  EXPECT_EQ(JoinShuffleKey(plans[1], p2.key, p2.value.cells), row);

  const ShuffleRecord p1 = MapPhase(plans[0], row, 400);
  EXPECT_EQ(p1.key, Key({"US", "CA", "Mtn View", "Retail"}));
  EXPECT_EQ(p1.value.cells, GroupKey(4, {"Amazon"}));

  const SegmentKey aggregated = Key({"US", "CA", "Mtn View", "*", "*"});
  const ShuffleRecord p3 = MapPhase(plans[2], aggregated, 9);
  EXPECT_EQ(p3.key, SegmentKey({kAll, kAll}));
  EXPECT_EQ(JoinShuffleKey(plans[2], p3.key, p3.value.cells), aggregated);
}

TEST_F(BatchedTest, MapPhaseChecksShape) {
  const std::vector<PhasePlan> plans = PlanPhases(schema_, ThreeGroups());
  EXPECT_THROW(MapPhase(plans[1], Key({"US", "CA", "MV", "*", "Amazon"}), 1),
               CubeError);
  EXPECT_THROW(MapPhase(plans[0], Key({"US", "CA", "MV", "R", "*"}), 1),
               CubeError);
  EXPECT_THROW(MapPhase(plans[0], Key({"US", "CA"}), 1), CubeError);
}

TEST_F(BatchedTest, ReduceOneColumnGroup) {
  const std::vector<PhasePlan> plans = PlanPhases(schema_, ThreeGroups());
  const SegmentKey shuffle = Key({"US", "CA", "MV", "Retail"});
  const std::vector<GroupValue> values = {{GroupKey(4, {"Amazon"}), 400},
                                          {GroupKey(4, {"Taobao"}), 300}};
  const ReduceOutput out = ReducePhase(plans[0], shuffle, values);
  const std::vector<SegmentRecord> expected = {
      {Key({"US", "CA", "MV", "Retail", "Amazon"}), 400},
      {Key({"US", "CA", "MV", "Retail", "Taobao"}), 300},
      {Key({"US", "CA", "MV", "Retail", "*"}), 700}};
  EXPECT_EQ(out.segments, expected);
  EXPECT_EQ(out.local_msgs, 2u);
}

TEST_F(BatchedTest, ReduceMergesDuplicateValues) {
  const std::vector<PhasePlan> plans = PlanPhases(schema_, ThreeGroups());
  const SegmentKey shuffle = Key({"US", "CA", "MV", "Retail"});
  const std::vector<GroupValue> values = {{GroupKey(4, {"Amazon"}), 400},
                                          {GroupKey(4, {"Amazon"}), 300}};
  const ReduceOutput out = ReducePhase(plans[0], shuffle, values);
  ASSERT_EQ(out.segments.size(), 2u);
  EXPECT_EQ(out.segments[0].count, 700);
  EXPECT_EQ(out.segments[1].count, 700);
  EXPECT_EQ(out.local_msgs, 1u);
}

TEST_F(BatchedTest, ReduceHierarchicalGroup) {
  const std::vector<PhasePlan> plans = PlanPhases(schema_, ThreeGroups());
  const SegmentKey shuffle = Key({"Retail", "Amazon"});
  const std::vector<GroupValue> values = {{GroupKey(0, {"US", "CA", "MV"}), 400}};
  const ReduceOutput out = ReducePhase(plans[2], shuffle, values);
  const std::vector<SegmentRecord> expected = {
      {Key({"US", "CA", "MV", "Retail", "Amazon"}), 400},
      {Key({"US", "CA", "*", "Retail", "Amazon"}), 400},
      {Key({"US", "*", "*", "Retail", "Amazon"}), 400},
      {Key({"*", "*", "*", "Retail", "Amazon"}), 400}};
  EXPECT_EQ(out.segments, expected);
  EXPECT_EQ(out.local_msgs, 3u);

  // Same answer as broadcasting over the region columns alone.
  const Schema region = schema_.Slice(0, 1);
  const std::vector<Row> projected = {{GroupKey(0, {"US", "CA", "MV"}), 400}};
  const Cube sub = BroadcastMaterialize(region, projected).cube;
  ASSERT_EQ(sub.size(), out.segments.size());
  for (const SegmentRecord& r : out.segments) {
    const SegmentKey cells(r.key.cells().subspan(0, 3));
    EXPECT_EQ(sub.Find(cells), r.count);
  }
}

TEST_F(BatchedTest, ReduceRejectsAggregatedValues) {
  const std::vector<PhasePlan> plans = PlanPhases(schema_, ThreeGroups());
  const std::vector<GroupValue> values = {{GroupKey(0, {"US", "*", "*"}), 1}};
  EXPECT_THROW(ReducePhase(plans[2], Key({"R", "A"}), values), CubeError);
}

TEST_F(BatchedTest, SingleRowMatchesOracle) {
  const std::vector<Row> rows = {
      {Key({"US", "CA", "Mtn View", "Retail", "Amazon"}), 400}};
  SimConfig sim;
  sim.machines = 3;
  const Materialization m = BatchedMaterialize(schema_, ThreeGroups(), rows, sim);
  EXPECT_EQ(m.cube.size(), 16u);
  EXPECT_EQ(m.cube, BroadcastMaterialize(schema_, rows).cube);
  ASSERT_EQ(m.stats.phases.size(), 3u);
  EXPECT_EQ(m.stats.phases[0].output_rows, 2u);
  EXPECT_EQ(m.stats.phases[1].output_rows, 4u);
  EXPECT_EQ(m.stats.phases[2].output_rows, 16u);
}

TEST_F(BatchedTest, SingleGroupEqualsOneReduce) {
  const std::vector<Row> rows = {
      {Key({"US", "CA", "Mtn View", "Retail", "Amazon"}), 400},
      {Key({"US", "CA", "Oakland", "Retail", "Taobao"}), 5}};
  const Grouping single = Grouping::Single(schema_);
  const std::vector<PhasePlan> plans = PlanPhases(schema_, single);
  std::vector<GroupValue> values;
  for (const Row& row : rows) values.push_back({row.key, row.count});
  const ReduceOutput direct = ReducePhase(plans[0], SegmentKey(), values);
  const Materialization m = BatchedMaterialize(schema_, single, rows, SimConfig{});
  EXPECT_EQ(m.cube, Cube::FromRecords(direct.segments));
  EXPECT_EQ(m.stats.phases[0].local_msgs, direct.local_msgs);
}

TEST_F(BatchedTest, DuplicateRowsMergeInPhaseOne) {
  const std::vector<Row> rows = {
      {Key({"US", "CA", "Mtn View", "Retail", "Amazon"}), 400},
      {Key({"US", "CA", "Mtn View", "Retail", "Amazon"}), 300}};
  const Materialization m =
      BatchedMaterialize(schema_, ThreeGroups(), rows, SimConfig{});
  EXPECT_EQ(m.stats.phases[0].input_rows, 2u);
  EXPECT_EQ(m.stats.phases[0].remote_msgs, 2u);
  EXPECT_EQ(m.stats.phases[0].output_rows, 2u);
  EXPECT_EQ(m.cube.Find(Key({"US", "CA", "Mtn View", "Retail", "Amazon"})), 700);
  EXPECT_EQ(m.cube, BroadcastMaterialize(schema_, rows).cube);
}

TEST_F(BatchedTest, EmptyInput) {
  const Materialization m =
      BatchedMaterialize(schema_, ThreeGroups(), {}, SimConfig{});
  EXPECT_TRUE(m.cube.empty());
  ASSERT_EQ(m.stats.phases.size(), 3u);
  EXPECT_EQ(m.stats.Totals().remote_msgs, 0u);
}

// Output size of phase i, counted directly: distinct valid keys reachable
// from the rows by starring only columns of G_i..G_1.
uint64_t DirectPhaseOutput(const Schema& schema, const std::vector<Row>& rows,
                           size_t first_free_column) {
  std::set<SegmentKey> keys;
  for (const Row& row : rows) {
    for (const SegmentKey& k : testing::ValidStarPatterns(schema, row.key)) {
      bool allowed = true;
      for (size_t c = 0; c < first_free_column && allowed; ++c) {
        allowed = k[c] != kAll;
      }
      if (allowed) keys.insert(k);
    }
  }
  return keys.size();
}

TEST(BatchedPropertyTest, InvariantsHoldOnRandomData) {
  for (uint64_t seed = 300; seed < 330; ++seed) {
    const testing::RandomCase c = testing::MakeRandomCase(seed, 120);
    SimConfig sim;
    sim.machines = 1 + seed % 7;
    sim.seed = seed;
    const testing::BatchedCheck check =
        testing::RunBatchedChecked(c.schema, c.grouping, c.rows, sim);
    for (const std::string& f : check.failures) ADD_FAILURE() << f;
    ASSERT_EQ(check.result.cube, BroadcastMaterialize(c.schema, c.rows).cube)
        << "seed " << seed;

    const std::vector<PhasePlan> plans = PlanPhases(c.schema, c.grouping);
    for (size_t i = 0; i < plans.size(); ++i) {
      const PhaseStats& p = check.result.stats.phases[i];
      EXPECT_EQ(p.output_rows,
                DirectPhaseOutput(c.schema, c.rows, plans[i].group.begin));
      EXPECT_LE(p.max_local_msgs_per_key, p.local_msgs);
      uint64_t machine_local = 0;
      uint64_t machine_out = 0;
      for (size_t m = 0; m < sim.machines; ++m) {
        machine_local += p.machine_local_msgs[m];
        machine_out += p.machine_output_rows[m];
      }
      EXPECT_EQ(machine_local, p.local_msgs);
      EXPECT_EQ(machine_out, p.output_rows);
    }
  }
}

TEST(BatchedPropertyTest, SpillingAndWorkersDoNotChangeResults) {
  const testing::RandomCase c = testing::MakeRandomCase(11, 400);
  SimConfig base;
  base.machines = 6;
  SimConfig other = base;
  other.workers = 3;
  other.spill_threshold = 17;
  const Materialization a = BatchedMaterialize(c.schema, c.grouping, c.rows, base);
  const Materialization b = BatchedMaterialize(c.schema, c.grouping, c.rows, other);
  EXPECT_EQ(a.cube, b.cube);
  EXPECT_EQ(a.stats, b.stats);
}

}  // namespace
}  // namespace cubemr
