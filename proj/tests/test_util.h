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

#ifndef CUBEMR_TESTS_TEST_UTIL_H_
#define CUBEMR_TESTS_TEST_UTIL_H_

// Test-only helpers and brute-force oracles. Nothing here calls the engine
// code paths it is used to check.

#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cubemr/batched.h"
#include "cubemr/cube.h"
#include "cubemr/dictionary.h"
#include "cubemr/materialization.h"
#include "cubemr/schema.h"
#include "cubemr/segment_key.h"

namespace cubemr {

// Readable gtest output for keys.
void PrintTo(const SegmentKey& key, std::ostream* os);

}  // namespace cubemr

namespace cubemr::testing {

// region(country, state, city), query_category, advertiser.
Schema AdsSchema();

// Interns the values of a row; "*" becomes ALL.
SegmentKey MakeKey(ValueDictionary* dictionary,
                   const std::vector<std::string>& cells);

// Hand-rolled hierarchy check: per dimension, no concrete cell after an ALL.
bool BruteValid(const Schema& schema, const SegmentKey& key);

// Every key obtained by replacing any subset of `key`'s cells with ALL,
// valid or not (2^C keys).
std::vector<SegmentKey> StarPatterns(const SegmentKey& key);

// The valid subset of StarPatterns, built recursively dimension by
// dimension rather than by filtering 2^C masks.
// Keys B among the star patterns of `a` with IsPrimaryChild(a, B).
std::set<SegmentKey> BruteParents(const Schema& schema, const SegmentKey& a);

std::vector<SegmentKey> ValidStarPatterns(const Schema& schema,
                                          const SegmentKey& key);

// Every valid key whose cells range over ALL and ids 1..values_per_column.
std::vector<SegmentKey> AllValidKeys(const Schema& schema,
                                     ValueId values_per_column);

// Cube computed segment by segment: candidate keys are valid star patterns
// of the rows, and each count is a fresh scan summing every matching row.
std::map<SegmentKey, Count> ScanCube(const Schema& schema,
                                     const std::vector<Row>& rows);

std::map<SegmentKey, Count> ToMap(const Cube& cube);

struct RandomCase {
  Schema schema;
  Grouping grouping;
  std::vector<Row> rows;
};

// 3-5 dimensions of depth 1-3, cardinality <= 6 per column, counts in
// [-100, 100], up to max_rows rows, and a random valid grouping.
RandomCase MakeRandomCase(uint64_t seed, size_t max_rows);

// Random grouping that respects order and keeps dimensions whole.
Grouping RandomGrouping(const Schema& schema, std::mt19937_64& rng);

// Full cross product of n one-column dimensions with c values each.
RandomCase CrossProductCase(size_t n, ValueId c);

// Local messages of a batched phase recounted from its output: for every
// output segment, the candidates obtained by starring one concrete cell of
// its group are tested with IsPrimaryChild over the group's schema.
uint64_t RecountLocalMessages(const PhasePlan& plan, const SegmentStore& output);

// Runs the batched engine and checks the per-phase invariants:
//   remote messages == input rows,
//   local messages == RecountLocalMessages,
//   every input key (after merging duplicates) reappears in the output,
//   local >= output - input, i.e. local/remote >= blow-up - 1.
struct BatchedCheck {
  Materialization result;
  bool remote_equals_input = true;
  bool local_matches_recount = true;
  bool output_contains_input = true;
  bool locality_bound = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

BatchedCheck RunBatchedChecked(const Schema& schema, const Grouping& grouping,
                               const std::vector<Row>& rows,
                               const SimConfig& sim);

std::string TempPath(const std::string& name);

std::string ReadFile(const std::string& path);

}  // namespace cubemr::testing

#endif  // CUBEMR_TESTS_TEST_UTIL_H_
