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

#ifndef CUBEMR_SEGMENT_STORE_H_
#define CUBEMR_SEGMENT_STORE_H_

#include <cstddef>
#include <cstdio>
#include <functional>
#include <memory>
#include <vector>

#include "cubemr/segment_key.h"

namespace cubemr {

inline constexpr size_t kDefaultSpillThreshold = 10'000'000;

// Inter-phase storage for (segment, count) records. Keeps records in memory
// until more than `spill_threshold` are buffered, then appends them to an
// anonymous temporary file. Iteration preserves append order.
class SegmentStore {
 public:
  explicit SegmentStore(size_t spill_threshold = kDefaultSpillThreshold);

  SegmentStore(SegmentStore&&) noexcept = default;
  SegmentStore& operator=(SegmentStore&&) noexcept = default;

  void Append(SegmentRecord record);

  size_t size() const { return spilled_ + buffer_.size(); }
  bool empty() const { return size() == 0; }
  size_t spilled() const { return spilled_; }

  void ForEach(const std::function<void(const SegmentRecord&)>& fn) const;

  // Drains the store into memory.
  std::vector<SegmentRecord> TakeAll() &&;

 private:
  struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
  };

  void Spill();

  size_t spill_threshold_;
  size_t spilled_ = 0;
  std::vector<SegmentRecord> buffer_;
  std::unique_ptr<std::FILE, FileCloser> file_;
};

}  // namespace cubemr

#endif  // CUBEMR_SEGMENT_STORE_H_
