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

#ifndef CUBEMR_SIM_H_
#define CUBEMR_SIM_H_

// In-process MapReduce simulator. "Machines" are accounting buckets: each
// shuffle key is hashed onto one of M machines and every copy-add is charged
// to the key and to its machine. Every mapper emission is one remote
// message; copy-adds done inside a reducer are local messages.
//
// Results are deterministic: the shuffle sorts (key, value) pairs, reducers
// see their values in sorted order, and outputs are concatenated in key
// order no matter how many worker threads run the reducers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cubemr/error.h"
#include "cubemr/segment_key.h"
#include "cubemr/segment_store.h"

namespace cubemr {

struct SimConfig {
  size_t machines = 1;
  uint64_t seed = 0;
  size_t spill_threshold = kDefaultSpillThreshold;
  // Reducer threads. Results never depend on this.
  size_t workers = 1;

  // Throws CubeError(kInvalidArgument) when machines or workers is zero.
  void Validate() const;
};

// Machine in [0, machines) owning `shuffle_key`.
size_t Shard(std::span<const ValueId> shuffle_key, const SimConfig& config);

struct PhaseStats {
  size_t phase = 0;
  uint64_t input_rows = 0;
  uint64_t remote_msgs = 0;
  uint64_t output_rows = 0;
  uint64_t local_msgs = 0;
  // "nodes": output segments produced under a single reducer key.
  uint64_t max_output_rows_per_key = 0;
  uint64_t max_local_msgs_per_key = 0;
  // Per machine: values received, segments produced, local copy-adds.
  std::vector<uint64_t> machine_input_rows;
  std::vector<uint64_t> machine_output_rows;
  std::vector<uint64_t> machine_local_msgs;

  double phase_blowup() const;
  double local_per_remote() const;
  // Work charged to a machine: messages it receives plus local copy-adds.
  uint64_t machine_load(size_t machine) const;
  uint64_t max_machine_load() const;
  double mean_machine_load() const;
  // max / mean machine load; 1.0 is perfect balance.
  double machine_balance() const;

  friend bool operator==(const PhaseStats&, const PhaseStats&) = default;
};

struct RunStats {
  std::string algorithm;
  std::vector<PhaseStats> phases;

  // Sums of every counter; per-key maxima are maxima over phases.
  PhaseStats Totals() const;

  // Share of local messages once one remote message per original input row
  // is discounted: local / (local + remote - input rows of the first phase).
  double LocalityFraction() const;

  friend bool operator==(const RunStats&, const RunStats&) = default;
};

// Handed to reducers for output and local-message accounting.
class ReduceContext {
 public:
  void Emit(SegmentKey key, Count count) {
    outputs_.push_back({std::move(key), count});
  }
  void AddLocalMessages(uint64_t n) { local_msgs_ += n; }

  std::vector<SegmentRecord>& outputs() { return outputs_; }
  uint64_t local_msgs() const { return local_msgs_; }
  void Reset() {
    outputs_.clear();
    local_msgs_ = 0;
  }

 private:
  std::vector<SegmentRecord> outputs_;
  uint64_t local_msgs_ = 0;
};

template <typename Value>
struct ShuffleEntry {
  SegmentKey key;
  Value value;

  friend auto operator<=>(const ShuffleEntry&, const ShuffleEntry&) = default;
  friend bool operator==(const ShuffleEntry&, const ShuffleEntry&) = default;
};

template <typename Value>
class Emitter {
 public:
  explicit Emitter(std::vector<ShuffleEntry<Value>>* out) : out_(out) {}
  void Emit(SegmentKey key, Value value) {
    out_->push_back({std::move(key), std::move(value)});
  }

 private:
  std::vector<ShuffleEntry<Value>>* out_;
};

namespace internal {

std::string DescribeKey(const SegmentKey& key);

struct WorkerResult {
  std::vector<SegmentRecord> outputs;
  uint64_t local_msgs = 0;
  uint64_t max_output_rows_per_key = 0;
  uint64_t max_local_msgs_per_key = 0;
  std::vector<uint64_t> machine_input_rows;
  std::vector<uint64_t> machine_output_rows;
  std::vector<uint64_t> machine_local_msgs;
  std::exception_ptr error;
};

}  // namespace internal

// Runs one MapReduce over `input`.
//
//   mapper(const SegmentKey&, Count, Emitter<Value>&)
//   reducer(const SegmentKey& shuffle_key, std::span<const Value>,
//           ReduceContext&)
//
// Value must be totally ordered. Fills *stats (phase index included) and
// returns the reducer outputs in shuffle-key order.
template <typename Value, typename Mapper, typename Reducer>
SegmentStore RunMapReduce(const SegmentStore& input, Mapper&& mapper,
                          Reducer&& reducer, const SimConfig& config,
                          size_t phase, PhaseStats* stats) {
  config.Validate();
  const size_t machines = config.machines;

  std::vector<ShuffleEntry<Value>> shuffled;
  Emitter<Value> emitter(&shuffled);
  input.ForEach([&](const SegmentRecord& r) { mapper(r.key, r.count, emitter); });

  *stats = PhaseStats{};
  stats->phase = phase;
  stats->input_rows = input.size();
  stats->remote_msgs = shuffled.size();
  stats->machine_input_rows.assign(machines, 0);
  stats->machine_output_rows.assign(machines, 0);
  stats->machine_local_msgs.assign(machines, 0);

  std::sort(shuffled.begin(), shuffled.end());
  std::vector<size_t> group_starts;
  for (size_t i = 0; i < shuffled.size(); ++i) {
    if (i == 0 || shuffled[i].key != shuffled[i - 1].key) {
      group_starts.push_back(i);
    }
  }
  const size_t num_groups = group_starts.size();
  group_starts.push_back(shuffled.size());

  const size_t workers = std::max<size_t>(1, std::min(config.workers, num_groups));
  std::vector<internal::WorkerResult> results(workers);

  auto run_chunk = [&](size_t w) {
    internal::WorkerResult& res = results[w];
    res.machine_input_rows.assign(machines, 0);
    res.machine_output_rows.assign(machines, 0);
    res.machine_local_msgs.assign(machines, 0);
    const size_t first = num_groups * w / workers;
    const size_t last = num_groups * (w + 1) / workers;
    ReduceContext ctx;
    std::vector<Value> values;
    for (size_t g = first; g < last; ++g) {
      const size_t begin = group_starts[g];
      const size_t end = group_starts[g + 1];
      const SegmentKey& key = shuffled[begin].key;
      values.clear();
      for (size_t i = begin; i < end; ++i) values.push_back(shuffled[i].value);
      ctx.Reset();
      try {
        reducer(key, std::span<const Value>(values), ctx);
      } catch (const CubeError& e) {
        res.error = std::make_exception_ptr(CubeError(
            e.code(), std::string(e.what()) + " (phase " +
                          std::to_string(phase) + ", reducer key " +
                          internal::DescribeKey(key) + ")"));
        return;
      } catch (...) {
        res.error = std::current_exception();
        return;
      }
      const size_t machine = Shard(key.cells(), config);
      const uint64_t produced = ctx.outputs().size();
      res.machine_input_rows[machine] += end - begin;
      res.machine_output_rows[machine] += produced;
      res.machine_local_msgs[machine] += ctx.local_msgs();
      res.local_msgs += ctx.local_msgs();
      res.max_output_rows_per_key = std::max(res.max_output_rows_per_key, produced);
      res.max_local_msgs_per_key =
          std::max(res.max_local_msgs_per_key, ctx.local_msgs());
      for (SegmentRecord& r : ctx.outputs()) res.outputs.push_back(std::move(r));
    }
  };

  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (size_t w = 0; w < workers; ++w) threads.emplace_back(run_chunk, w);
    for (std::thread& t : threads) t.join();
  }

  SegmentStore output(config.spill_threshold);
  for (internal::WorkerResult& res : results) {
    if (res.error) std::rethrow_exception(res.error);
  }
  shuffled.clear();
  shuffled.shrink_to_fit();
  for (internal::WorkerResult& res : results) {
    stats->output_rows += res.outputs.size();
    stats->local_msgs += res.local_msgs;
    stats->max_output_rows_per_key =
        std::max(stats->max_output_rows_per_key, res.max_output_rows_per_key);
    stats->max_local_msgs_per_key =
        std::max(stats->max_local_msgs_per_key, res.max_local_msgs_per_key);
    for (size_t m = 0; m < machines; ++m) {
      stats->machine_input_rows[m] += res.machine_input_rows[m];
      stats->machine_output_rows[m] += res.machine_output_rows[m];
      stats->machine_local_msgs[m] += res.machine_local_msgs[m];
    }
    for (SegmentRecord& r : res.outputs) output.Append(std::move(r));
    res.outputs = {};
  }
  return output;
}

}  // namespace cubemr

#endif  // CUBEMR_SIM_H_
