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

#include <limits>

#include "cubemr/error.h"
#include "cubemr/lattice.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace cubemr {
namespace {

using testing::MakeKey;

class BroadcastTest : public ::testing::Test {
 protected:
  Row MakeRow(const std::vector<std::string>& cells, Count count) {
    return {MakeKey(&dictionary_, cells), count};
  }

  Schema schema_ = testing::AdsSchema();
  ValueDictionary dictionary_{5};
};

TEST_F(BroadcastTest, SingleRowFillsSixteenSegments) {
  const std::vector<Row> rows = {
      MakeRow({"US", "CA", "Mtn View", "Retail", "Amazon"}, 400)};
  const Materialization m = BroadcastMaterialize(schema_, rows);
  ASSERT_EQ(m.cube.size(), 16u);
  for (const SegmentRecord& r : m.cube.entries()) EXPECT_EQ(r.count, 400);
  EXPECT_EQ(testing::ToMap(m.cube), testing::ScanCube(schema_, rows));
  ASSERT_EQ(m.stats.phases.size(), 1u);
  EXPECT_EQ(m.stats.phases[0].input_rows, 1u);
  EXPECT_EQ(m.stats.phases[0].remote_msgs, 15u);
  EXPECT_EQ(m.stats.phases[0].output_rows, 16u);
}

TEST_F(BroadcastTest, EmptyInput) {
  const Materialization m = BroadcastMaterialize(schema_, {});
  EXPECT_TRUE(m.cube.empty());
  EXPECT_EQ(m.stats.phases[0].remote_msgs, 0u);
}

TEST_F(BroadcastTest, IdenticalRowsAdd) {
  const std::vector<Row> rows = {
      MakeRow({"US", "CA", "Mtn View", "Retail", "Amazon"}, 400),
      MakeRow({"US", "CA", "Mtn View", "Retail", "Amazon"}, 300)};
  const Materialization m = BroadcastMaterialize(schema_, rows);
  ASSERT_EQ(m.cube.size(), 16u);
  for (const SegmentRecord& r : m.cube.entries()) EXPECT_EQ(r.count, 700);
}

TEST_F(BroadcastTest, TwoDisjointRowsShareOnlyTheApex) {
  const std::vector<Row> rows = {
      MakeRow({"US", "CA", "Mtn View", "Retail", "Amazon"}, 400),
      MakeRow({"CN", "ZJ", "Hangzhou", "Shopping", "Taobao"}, 300)};
  const Materialization m = BroadcastMaterialize(schema_, rows);
  EXPECT_EQ(m.cube.size(), 31u);
  EXPECT_EQ(m.cube.Find(SegmentKey(5, kAll)), 700);
  EXPECT_EQ(testing::ToMap(m.cube), testing::ScanCube(schema_, rows));
}

TEST_F(BroadcastTest, ZeroSumSegmentsAreKept) {
  const std::vector<Row> rows = {
      MakeRow({"US", "CA", "Mtn View", "Retail", "Amazon"}, 5),
      MakeRow({"US", "CA", "Mtn View", "Retail", "Amazon"}, -5)};
  const Materialization m = BroadcastMaterialize(schema_, rows);
  EXPECT_EQ(m.cube.size(), 16u);
  EXPECT_EQ(m.cube.Find(SegmentKey(5, kAll)), 0);
}

TEST_F(BroadcastTest, OverflowIsAnError) {
  const Count big = std::numeric_limits<Count>::max();
  const std::vector<Row> rows = {MakeRow({"US", "CA", "MV", "R", "A"}, big),
                                 MakeRow({"US", "CA", "MV", "R", "B"}, 1)};
  try {
    BroadcastMaterialize(schema_, rows);
    FAIL() << "expected overflow";
  } catch (const CubeError& e) {
    EXPECT_EQ(e.code(), CubeError::Code::kOverflow);
  }
}

TEST_F(BroadcastTest, RejectsPartialRows) {
  const std::vector<Row> rows = {MakeRow({"US", "CA", "*", "R", "A"}, 1)};
  EXPECT_THROW(BroadcastMaterialize(schema_, rows), CubeError);
}

TEST(BroadcastPropertyTest, MatchesPerSegmentScan) {
  for (uint64_t seed = 100; seed < 120; ++seed) {
    const testing::RandomCase c = testing::MakeRandomCase(seed, 80);
    const Materialization m = BroadcastMaterialize(c.schema, c.rows);
    ASSERT_EQ(testing::ToMap(m.cube), testing::ScanCube(c.schema, c.rows));
    ASSERT_EQ(m.stats.phases[0].remote_msgs,
              c.rows.size() * (SegmentsPerRow(c.schema) - 1));
  }
}

}  // namespace
}  // namespace cubemr
