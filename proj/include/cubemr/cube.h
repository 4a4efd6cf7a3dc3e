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

#ifndef CUBEMR_CUBE_H_
#define CUBEMR_CUBE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cubemr/segment_key.h"

namespace cubemr {

// Materialized cube: segment key -> count, held as a vector sorted by key.
class Cube {
 public:
  Cube() = default;

  // Takes records with unique keys in any order. Throws
  // CubeError(kInvalidArgument) on a duplicate key.
  static Cube FromRecords(std::vector<SegmentRecord> records);

  // Sums records per key (with overflow checks).
  static Cube Aggregate(std::vector<SegmentRecord> records);

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const SegmentRecord> entries() const { return entries_; }

  std::optional<Count> Find(const SegmentKey& key) const;

  friend bool operator==(const Cube&, const Cube&) = default;

 private:
  std::vector<SegmentRecord> entries_;
};

}  // namespace cubemr

#endif  // CUBEMR_CUBE_H_
