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

#ifndef CUBEMR_HASH_H_
#define CUBEMR_HASH_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "cubemr/segment_key.h"

namespace cubemr {

// MurmurHash64A (Austin Appleby, public domain) over a byte buffer.
uint64_t MurmurHash64A(const void* data, size_t length, uint64_t seed);

// Hashes the little-endian 32-bit serialization of `cells`. Stable across
// platforms for a fixed seed.
uint64_t HashCells(std::span<const ValueId> cells, uint64_t seed);

}  // namespace cubemr

#endif  // CUBEMR_HASH_H_
