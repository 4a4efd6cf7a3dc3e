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

#include "cubemr/lattice.h"

#include <string>

#include "cubemr/error.h"

namespace cubemr {

namespace {

void CheckLength(const Schema& schema, const SegmentKey& key) {
  if (key.size() != schema.num_columns()) {
    throw CubeError(CubeError::Code::kShape,
                    "key has " + std::to_string(key.size()) +
                        " cells but the schema has " +
                        std::to_string(schema.num_columns()) + " columns");
  }
}

}  // namespace

bool IsValidSegment(const Schema& schema, const SegmentKey& key) {
  CheckLength(schema, key);
  for (size_t d = 0; d < schema.num_dimensions(); ++d) {
    bool seen_star = false;
    for (size_t c = schema.dimension_begin(d); c < schema.dimension_end(d);
         ++c) {
      if (key[c] == kAll) {
        seen_star = true;
      } else if (seen_star) {
        return false;
      }
    }
  }
  return true;
}

size_t SegmentsPerRow(const Schema& schema) {
  size_t n = 1;
  for (const Dimension& dimension : schema.dimensions()) {
    n *= dimension.columns.size() + 1;
  }
  return n;
}

std::vector<SegmentKey> EnumerateSegments(const Schema& schema,
                                          const SegmentKey& row_key) {
  CheckLength(schema, row_key);
  if (!row_key.fully_concrete()) {
    throw InvalidArgument("EnumerateSegments needs a fully concrete key");
  }
  const size_t dims = schema.num_dimensions();
  // Mixed-radix counter: stars[d] is the ALL-suffix length of dimension d.
  std::vector<size_t> stars(dims, 0);
  std::vector<SegmentKey> out;
  out.reserve(SegmentsPerRow(schema));
  while (true) {
    SegmentKey key = row_key;
    for (size_t d = 0; d < dims; ++d) {
      const size_t end = schema.dimension_end(d);
      for (size_t c = end - stars[d]; c < end; ++c) key[c] = kAll;
    }
    out.push_back(std::move(key));

    size_t d = dims;
    while (d > 0) {
      --d;
      if (stars[d] < schema.dimension(d).columns.size()) {
        ++stars[d];
        break;
      }
      stars[d] = 0;
      if (d == 0) return out;
    }
  }
}

std::optional<size_t> RightmostStar(const SegmentKey& key) {
  for (size_t i = key.size(); i-- > 0;) {
    if (key[i] == kAll) return i;
  }
  return std::nullopt;
}

std::optional<size_t> PivotStar(const Schema& schema, const SegmentKey& key) {
  CheckLength(schema, key);
  for (size_t d = schema.num_dimensions(); d-- > 0;) {
    for (size_t c = schema.dimension_begin(d); c < schema.dimension_end(d);
         ++c) {
      if (key[c] == kAll) return c;
    }
  }
  return std::nullopt;
}

bool IsPrimaryChild(const Schema& schema, const SegmentKey& a,
                    const SegmentKey& b) {
  if (!IsValidSegment(schema, a) || !IsValidSegment(schema, b)) return false;
  const std::optional<size_t> pivot = PivotStar(schema, b);
  if (!pivot || a[*pivot] == kAll) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i != *pivot && a[i] != b[i]) return false;
  }
  return true;
}

size_t CountPrimaryParents(const Schema& schema, const SegmentKey& key) {
  size_t n = 0;
  ForEachPrimaryParent(schema, key, [&n](size_t) { ++n; });
  return n;
}

std::vector<SegmentKey> PrimaryParents(const Schema& schema,
                                       const SegmentKey& key) {
  CheckLength(schema, key);
  std::vector<SegmentKey> parents;
  ForEachPrimaryParent(schema, key, [&](size_t pos) {
    parents.push_back(key.With(pos, kAll));
  });
  return parents;
}

}  // namespace cubemr
