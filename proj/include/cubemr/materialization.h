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

#ifndef CUBEMR_MATERIALIZATION_H_
#define CUBEMR_MATERIALIZATION_H_

#include <cstddef>
#include <functional>
#include <span>

#include "cubemr/cube.h"
#include "cubemr/schema.h"
#include "cubemr/segment_store.h"
#include "cubemr/sim.h"

namespace cubemr {

// What every engine returns.
struct Materialization {
  Cube cube;
  RunStats stats;
};

// Called after each simulated phase with that phase's input and output.
using PhaseObserver = std::function<void(
    const PhaseStats& stats, const SegmentStore& input,
    const SegmentStore& output)>;

// Copies rows into a store after checking that each key has the schema's
// width and no ALL cell. Throws CubeError(kShape) otherwise.
SegmentStore LoadRows(const Schema& schema, std::span<const Row> rows,
                      size_t spill_threshold);

}  // namespace cubemr

#endif  // CUBEMR_MATERIALIZATION_H_
