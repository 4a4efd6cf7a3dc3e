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

#include "cubemr/segment_store.h"

#include <cstdint>
#include <utility>

#include "cubemr/error.h"

namespace cubemr {

// Spill file layout per record: u32 cell count, cells, i64 count (host
// endianness; the file never outlives the process).

SegmentStore::SegmentStore(size_t spill_threshold)
    : spill_threshold_(spill_threshold == 0 ? 1 : spill_threshold) {}

void SegmentStore::Append(SegmentRecord record) {
  buffer_.push_back(std::move(record));
  if (buffer_.size() > spill_threshold_) Spill();
}

void SegmentStore::Spill() {
  if (!file_) {
    file_.reset(std::tmpfile());
    if (!file_) throw IoError("cannot create spill file");
  }
  if (std::fseek(file_.get(), 0, SEEK_END) != 0) {
    throw IoError("cannot seek spill file");
  }
  for (const SegmentRecord& r : buffer_) {
    const uint32_t width = static_cast<uint32_t>(r.key.size());
    if (std::fwrite(&width, sizeof(width), 1, file_.get()) != 1 ||
        std::fwrite(r.key.data(), sizeof(ValueId), width, file_.get()) !=
            width ||
        std::fwrite(&r.count, sizeof(r.count), 1, file_.get()) != 1) {
      throw IoError("short write to spill file");
    }
  }
  spilled_ += buffer_.size();
  buffer_.clear();
}

void SegmentStore::ForEach(
    const std::function<void(const SegmentRecord&)>& fn) const {
  if (spilled_ > 0) {
    std::FILE* f = file_.get();
    std::rewind(f);
    SegmentRecord r;
    std::vector<ValueId> cells;
    for (size_t i = 0; i < spilled_; ++i) {
      uint32_t width = 0;
      if (std::fread(&width, sizeof(width), 1, f) != 1) {
        throw IoError("truncated spill file");
      }
      cells.resize(width);
      if (std::fread(cells.data(), sizeof(ValueId), width, f) != width ||
          std::fread(&r.count, sizeof(r.count), 1, f) != 1) {
        throw IoError("truncated spill file");
      }
      r.key = SegmentKey(std::span<const ValueId>(cells));
      fn(r);
    }
  }
  for (const SegmentRecord& r : buffer_) fn(r);
}

std::vector<SegmentRecord> SegmentStore::TakeAll() && {
  if (spilled_ == 0) return std::move(buffer_);
  std::vector<SegmentRecord> all;
  all.reserve(size());
  ForEach([&all](const SegmentRecord& r) { all.push_back(r); });
  return all;
}

}  // namespace cubemr
