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

#include "cubemr/hash.h"

#include <array>

namespace cubemr {

namespace {

uint64_t LoadLittleEndian64(const unsigned char* p) {
  uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

uint64_t MurmurHash64A(const void* data, size_t length, uint64_t seed) {
  constexpr uint64_t m = 0xc6a4a7935bd1e995ULL;
  constexpr int r = 47;

  uint64_t h = seed ^ (length * m);
  const auto* bytes = static_cast<const unsigned char*>(data);
  const size_t blocks = length / 8;
  for (size_t i = 0; i < blocks; ++i) {
    uint64_t k = LoadLittleEndian64(bytes + 8 * i);
    k *= m;
    k ^= k >> r;
    k *= m;
    h ^= k;
    h *= m;
  }

  const unsigned char* tail = bytes + 8 * blocks;
  switch (length & 7) {
    case 7: h ^= uint64_t{tail[6]} << 48; [[fallthrough]];
    case 6: h ^= uint64_t{tail[5]} << 40; [[fallthrough]];
    case 5: h ^= uint64_t{tail[4]} << 32; [[fallthrough]];
    case 4: h ^= uint64_t{tail[3]} << 24; [[fallthrough]];
    case 3: h ^= uint64_t{tail[2]} << 16; [[fallthrough]];
    case 2: h ^= uint64_t{tail[1]} << 8; [[fallthrough]];
    case 1:
      h ^= uint64_t{tail[0]};
      h *= m;
  }

  h ^= h >> r;
  h *= m;
  h ^= h >> r;
  return h;
}

uint64_t HashCells(std::span<const ValueId> cells, uint64_t seed) {
  // Keys are short; serialize on the stack when possible.
  constexpr size_t kStackCells = 32;
  std::array<unsigned char, 4 * kStackCells> stack;
  std::vector<unsigned char> heap;
  unsigned char* out = stack.data();
  if (cells.size() > kStackCells) {
    heap.resize(4 * cells.size());
    out = heap.data();
  }
  for (size_t i = 0; i < cells.size(); ++i) {
    const ValueId v = cells[i];
    out[4 * i] = static_cast<unsigned char>(v);
    out[4 * i + 1] = static_cast<unsigned char>(v >> 8);
    out[4 * i + 2] = static_cast<unsigned char>(v >> 16);
    out[4 * i + 3] = static_cast<unsigned char>(v >> 24);
  }
  return MurmurHash64A(out, 4 * cells.size(), seed);
}

}  // namespace cubemr
