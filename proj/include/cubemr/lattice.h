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

#ifndef CUBEMR_LATTICE_H_
#define CUBEMR_LATTICE_H_

// Segment validity and the primary-child relation over segment keys.
//
// A key is valid when, inside every dimension, the ALL cells form a suffix
// of that dimension's columns (a lower level is only set when every higher
// level is set).
//
// Primary children. For a valid key B with at least one ALL cell, the
// pivot of B is the rightmost position among the highest-level ALL cell of
// each dimension. A is a primary child of B when A and B differ only at the
// pivot and A is concrete there. With one-column dimensions the pivot is
// simply the rightmost ALL cell. Choosing the highest-level ALL cell keeps
// every child valid, so each segment's count is exactly the sum over its
// primary children, and every child sits one star level below its parent.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cubemr/schema.h"
#include "cubemr/segment_key.h"

namespace cubemr {

// Throws CubeError(kShape) when the key length differs from the schema.
bool IsValidSegment(const Schema& schema, const SegmentKey& key);

// Every segment a fully concrete row belongs to: one key per choice of a
// (possibly empty) ALL suffix in each dimension, Π_d (depth_d + 1) in total.
// The first key is the row itself and the last is the all-ALL key.
std::vector<SegmentKey> EnumerateSegments(const Schema& schema,
                                          const SegmentKey& row_key);

// Number of segments a fully concrete row belongs to.
size_t SegmentsPerRow(const Schema& schema);

// Largest position holding ALL, or nullopt for a fully concrete key.
std::optional<size_t> RightmostStar(const SegmentKey& key);

// Rightmost position among each dimension's highest-level ALL cell.
std::optional<size_t> PivotStar(const Schema& schema, const SegmentKey& key);

bool IsPrimaryChild(const Schema& schema, const SegmentKey& a,
                    const SegmentKey& b);

// Calls fn(pos) once per primary parent of `key`, where the parent is `key`
// with cell `pos` replaced by ALL. Walks dimensions right to left and stops
// at the first one that is not fully concrete.
template <typename Fn>
void ForEachPrimaryParent(const Schema& schema, const SegmentKey& key, Fn fn) {
  for (size_t d = schema.num_dimensions(); d-- > 0;) {
    const size_t begin = schema.dimension_begin(d);
    const size_t end = schema.dimension_end(d);
    size_t concrete_end = begin;
    while (concrete_end < end && key[concrete_end] != kAll) ++concrete_end;
    if (concrete_end > begin) fn(concrete_end - 1);
    if (concrete_end < end) break;
  }
}

size_t CountPrimaryParents(const Schema& schema, const SegmentKey& key);

std::vector<SegmentKey> PrimaryParents(const Schema& schema,
                                       const SegmentKey& key);

}  // namespace cubemr

#endif  // CUBEMR_LATTICE_H_
