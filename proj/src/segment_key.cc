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

#include "cubemr/segment_key.h"

#include <algorithm>
#include <cstring>

#include "cubemr/error.h"
#include "cubemr/hash.h"

namespace cubemr {

Count CheckedAdd(Count a, Count b) {
  Count sum;
  if (__builtin_add_overflow(a, b, &sum)) {
    throw CubeError(CubeError::Code::kOverflow, "count overflow");
  }
  return sum;
}

SegmentKey::SegmentKey(size_t size, ValueId fill) {
  Allocate(size);
  std::fill_n(data(), size, fill);
}

SegmentKey::SegmentKey(std::span<const ValueId> cells) {
  Allocate(cells.size());
  std::copy(cells.begin(), cells.end(), data());
}

SegmentKey::SegmentKey(std::initializer_list<ValueId> cells) {
  Allocate(cells.size());
  std::copy(cells.begin(), cells.end(), data());
}

SegmentKey::SegmentKey(const SegmentKey& other) {
  Allocate(other.size_);
  std::copy(other.begin(), other.end(), data());
}

SegmentKey::SegmentKey(SegmentKey&& other) noexcept : size_(other.size_) {
  if (other.on_heap()) {
    heap_ = other.heap_;
    other.size_ = 0;
  } else {
    std::memcpy(inline_, other.inline_, sizeof(inline_));
  }
}

SegmentKey& SegmentKey::operator=(const SegmentKey& other) {
  if (this != &other) {
    SegmentKey copy(other);
    *this = std::move(copy);
  }
  return *this;
}

SegmentKey& SegmentKey::operator=(SegmentKey&& other) noexcept {
  if (this != &other) {
    if (on_heap()) delete[] heap_;
    size_ = other.size_;
    if (other.on_heap()) {
      heap_ = other.heap_;
      other.size_ = 0;
    } else {
      std::memcpy(inline_, other.inline_, sizeof(inline_));
    }
  }
  return *this;
}

SegmentKey::~SegmentKey() {
  if (on_heap()) delete[] heap_;
}

void SegmentKey::Allocate(size_t size) {
  size_ = static_cast<uint32_t>(size);
  if (on_heap()) {
    heap_ = new ValueId[size];
  } else {
    std::fill_n(inline_, kInlineCells, kAll);
  }
}

bool SegmentKey::fully_concrete() const {
  return std::none_of(begin(), end(), [](ValueId v) { return v == kAll; });
}

size_t SegmentKey::star_count() const {
  return static_cast<size_t>(std::count(begin(), end(), kAll));
}

SegmentKey SegmentKey::With(size_t pos, ValueId value) const {
  SegmentKey copy(*this);
  copy[pos] = value;
  return copy;
}

bool operator==(const SegmentKey& a, const SegmentKey& b) {
  return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
}

std::strong_ordering operator<=>(const SegmentKey& a, const SegmentKey& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

size_t SegmentKeyHash::operator()(const SegmentKey& key) const {
  return static_cast<size_t>(HashCells(key.cells(), 0));
}

}  // namespace cubemr
