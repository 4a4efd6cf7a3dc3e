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

#ifndef CUBEMR_BROADCAST_H_
#define CUBEMR_BROADCAST_H_

#include <span>

#include "cubemr/materialization.h"

namespace cubemr {

// Naive broadcast: every row sends its count to every segment it belongs
// to, and each segment sums what it receives. Runs as a plain in-memory
// hash aggregation, independent of the simulator, and serves as the
// reference the other engines are checked against.
//
// Stats hold a single phase. Each row is charged (segments per row - 1)
// remote messages; the row's own shuffle message is input_rows.
Materialization BroadcastMaterialize(const Schema& schema,
                                     std::span<const Row> rows);

}  // namespace cubemr

#endif  // CUBEMR_BROADCAST_H_
