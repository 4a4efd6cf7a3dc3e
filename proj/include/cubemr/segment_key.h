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

#ifndef CUBEMR_SEGMENT_KEY_H_
#define CUBEMR_SEGMENT_KEY_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace cubemr {

// Dense per-column value id. Concrete values are numbered from 1; 0 is the
// ALL cell, so the natural integer order sorts ALL before every value.
using ValueId = uint32_t;
inline constexpr ValueId kAll = 0;

// Additive metric. Signed because change metrics can go negative.
using Count = int64_t;

// Adds two counts, throwing CubeError(kOverflow) instead of wrapping.
Count CheckedAdd(Count a, Count b);

// The full column vector of a segment. Keys with up to kInlineCells columns
// are stored inline; wider keys spill to the heap.
class SegmentKey {
 public:
  static constexpr size_t kInlineCells = 7;

  SegmentKey() : size_(0) {}
  explicit SegmentKey(size_t size, ValueId fill = kAll);
  explicit SegmentKey(std::span<const ValueId> cells);
  SegmentKey(std::initializer_list<ValueId> cells);

  SegmentKey(const SegmentKey& other);
  SegmentKey(SegmentKey&& other) noexcept;
  SegmentKey& operator=(const SegmentKey& other);
  SegmentKey& operator=(SegmentKey&& other) noexcept;
  ~SegmentKey();

  size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  ValueId operator[](size_t i) const { return data()[i]; }
  ValueId& operator[](size_t i) { return data()[i]; }

  const ValueId* data() const { return on_heap() ? heap_ : inline_; }
  ValueId* data() { return on_heap() ? heap_ : inline_; }
  std::span<const ValueId> cells() const { return {data(), size_}; }
  const ValueId* begin() const { return data(); }
  const ValueId* end() const { return data() + size_; }

  bool is_concrete(size_t i) const { return data()[i] != kAll; }
  bool fully_concrete() const;
  size_t star_count() const;

  // Copy of this key with cell `pos` replaced by `value`.
  SegmentKey With(size_t pos, ValueId value) const;

  friend bool operator==(const SegmentKey& a, const SegmentKey& b);
  friend std::strong_ordering operator<=>(const SegmentKey& a,
                                          const SegmentKey& b);

 private:
  bool on_heap() const { return size_ > kInlineCells; }
  void Allocate(size_t size);

  uint32_t size_;
  union {
    ValueId inline_[kInlineCells];
    ValueId* heap_;
  };
};

struct SegmentKeyHash {
  size_t operator()(const SegmentKey& key) const;
};

// An input row: a fully concrete key and its count.
struct Row {
  SegmentKey key;
  Count count = 0;
};

// A (segment, count) pair flowing between phases.
struct SegmentRecord {
  SegmentKey key;
  Count count = 0;

  friend bool operator==(const SegmentRecord&, const SegmentRecord&) = default;
};

}  // namespace cubemr

#endif  // CUBEMR_SEGMENT_KEY_H_
