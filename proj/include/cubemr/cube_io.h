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

#ifndef CUBEMR_CUBE_IO_H_
#define CUBEMR_CUBE_IO_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubemr/cube.h"
#include "cubemr/dictionary.h"
#include "cubemr/schema.h"

namespace cubemr {

// Writes the cube in key order, skipping segments with
// |count| < min_abs_count when a threshold is given. The cube itself is
// untouched. Returns the number of segment rows written.
size_t WriteCube(const std::string& path, const Schema& schema,
                 const ValueDictionary& dictionary, const Cube& cube,
                 std::optional<Count> min_abs_count = std::nullopt);

// Reads a cube file written by WriteCube. Values are interned into
// *dictionary, which is canonicalized afterwards. Throws CubeError(kParse)
// for malformed lines, invalid segments and duplicate keys.
Cube ReadCube(const std::string& path, const Schema& schema,
              ValueDictionary* dictionary);

// Segment key with decoded values; nullopt is ALL and sorts first.
using TextKey = std::vector<std::optional<std::string>>;

std::string FormatTextKey(const TextKey& key);

struct Discrepancy {
  TextKey key;
  std::optional<Count> a;  // nullopt when the key is missing from a
  std::optional<Count> b;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

// Compares two cube files key by key, returning differences in key order.
// Throws CubeError(kInvalidArgument) when the headers differ.
std::vector<Discrepancy> DiffCubes(const std::string& path_a,
                                   const std::string& path_b);

}  // namespace cubemr

#endif  // CUBEMR_CUBE_IO_H_
