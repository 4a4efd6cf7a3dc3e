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

#include "cubemr/sim.h"

#include <numeric>

#include "cubemr/hash.h"

namespace cubemr {

namespace {

double Ratio(uint64_t num, uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

void SimConfig::Validate() const {
  if (machines == 0) throw InvalidArgument("machine count must be positive");
  if (workers == 0) throw InvalidArgument("worker count must be positive");
}

size_t Shard(std::span<const ValueId> shuffle_key, const SimConfig& config) {
  if (config.machines <= 1) return 0;
  return static_cast<size_t>(HashCells(shuffle_key, config.seed) %
                             config.machines);
}

double PhaseStats::phase_blowup() const {
  return Ratio(output_rows, input_rows);
}

double PhaseStats::local_per_remote() const {
  return Ratio(local_msgs, remote_msgs);
}

uint64_t PhaseStats::machine_load(size_t machine) const {
  return machine_input_rows[machine] + machine_local_msgs[machine];
}

uint64_t PhaseStats::max_machine_load() const {
  uint64_t best = 0;
  for (size_t m = 0; m < machine_input_rows.size(); ++m) {
    best = std::max(best, machine_load(m));
  }
  return best;
}

double PhaseStats::mean_machine_load() const {
  if (machine_input_rows.empty()) return 0.0;
  uint64_t total = 0;
  for (size_t m = 0; m < machine_input_rows.size(); ++m) {
    total += machine_load(m);
  }
  return static_cast<double>(total) /
         static_cast<double>(machine_input_rows.size());
}

double PhaseStats::machine_balance() const {
  const double mean = mean_machine_load();
  return mean == 0.0 ? 0.0 : static_cast<double>(max_machine_load()) / mean;
}

PhaseStats RunStats::Totals() const {
  PhaseStats total;
  for (const PhaseStats& p : phases) {
    total.input_rows += p.input_rows;
    total.remote_msgs += p.remote_msgs;
    total.output_rows += p.output_rows;
    total.local_msgs += p.local_msgs;
    total.max_output_rows_per_key =
        std::max(total.max_output_rows_per_key, p.max_output_rows_per_key);
    total.max_local_msgs_per_key =
        std::max(total.max_local_msgs_per_key, p.max_local_msgs_per_key);
    const size_t machines = p.machine_input_rows.size();
    if (total.machine_input_rows.size() < machines) {
      total.machine_input_rows.resize(machines, 0);
      total.machine_output_rows.resize(machines, 0);
      total.machine_local_msgs.resize(machines, 0);
    }
    for (size_t m = 0; m < machines; ++m) {
      total.machine_input_rows[m] += p.machine_input_rows[m];
      total.machine_output_rows[m] += p.machine_output_rows[m];
      total.machine_local_msgs[m] += p.machine_local_msgs[m];
    }
  }
  return total;
}

double RunStats::LocalityFraction() const {
  if (phases.empty()) return 0.0;
  const PhaseStats total = Totals();
  const uint64_t first_inputs = phases.front().input_rows;
  const uint64_t remote =
      total.remote_msgs > first_inputs ? total.remote_msgs - first_inputs : 0;
  return Ratio(total.local_msgs, total.local_msgs + remote);
}

namespace internal {

std::string DescribeKey(const SegmentKey& key) {
  std::string out = "(";
  for (size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out += ",";
    out += key[i] == kAll ? std::string("*") : std::to_string(key[i]);
  }
  return out + ")";
}

}  // namespace internal

}  // namespace cubemr
