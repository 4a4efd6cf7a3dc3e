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

#ifndef CUBEMR_LAYERED_H_
#define CUBEMR_LAYERED_H_

#include <span>

#include "cubemr/materialization.h"

namespace cubemr {

// Layered naive engine: a chain of simulated MapReduces keyed by segment.
// Round 0 merges duplicate rows. Round k sends every segment with k-1 ALL
// cells to each of its primary parents, all of which have k ALL cells, and
// sums per parent. Mapper emissions are remote; no local messages occur.
// Stops at the first empty star level, since every later level is then
// empty too. Phase indices in the stats are the round numbers.
Materialization LayeredMaterialize(const Schema& schema,
                                   std::span<const Row> rows,
                                   const SimConfig& config,
                                   const PhaseObserver& observer = {});

}  // namespace cubemr

#endif  // CUBEMR_LAYERED_H_
