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

#ifndef CUBEMR_STATS_REPORT_H_
#define CUBEMR_STATS_REPORT_H_

#include <cstdint>
#include <string>

#include "cubemr/sim.h"

namespace cubemr {

// 999 -> "999", 24'900'000'000 -> "24.9G". One decimal above 1000.
std::string FormatSi(uint64_t value);

// Run-stats table: one row per phase plus a totals row, followed by the
// locality fraction.
std::string RenderStats(const RunStats& stats);

// One JSON object per phase and line, keyed by the PhaseStats field names.
std::string StatsToJsonLines(const RunStats& stats);

void WriteStatsFile(const std::string& path, const RunStats& stats);

}  // namespace cubemr

#endif  // CUBEMR_STATS_REPORT_H_
