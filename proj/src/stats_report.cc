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

#include "cubemr/stats_report.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <vector>

#include "cubemr/error.h"
#include "json.hpp"

namespace cubemr {

namespace {

std::string Fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

using TableRow = std::vector<std::string>;

void AppendTable(const std::vector<TableRow>& rows, std::string* out) {
  std::vector<size_t> widths;
  for (const TableRow& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  for (const TableRow& row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += " | ";
      line += std::string(widths[i] - row[i].size(), ' ');
      line += row[i];
    }
    *out += line + "\n";
  }
}

}  // namespace

std::string FormatSi(uint64_t value) {
  static constexpr std::array<const char*, 6> kSuffix = {"K", "M", "G",
                                                         "T", "P", "E"};
  if (value < 1000) return std::to_string(value);
  double scaled = static_cast<double>(value);
  size_t unit = 0;
  scaled /= 1000.0;
  // Move up a unit when rounding to one decimal would print 1000.0.
  while (scaled >= 999.95 && unit + 1 < kSuffix.size()) {
    scaled /= 1000.0;
    ++unit;
  }
  return Fixed(scaled, 1) + kSuffix[unit];
}

std::string RenderStats(const RunStats& stats) {
  std::vector<TableRow> rows;
  rows.push_back({"phase", "#input rows", "#remote msgs", "#output rows",
                  "#local msgs", "phase blow-up", "#local/#remote",
                  "max #nodes per key", "max #local msgs per key",
                  "max machine load", "mean machine load", "balance"});
  auto machine_cells = [](const PhaseStats& p) -> TableRow {
    if (p.machine_input_rows.empty()) return {"-", "-", "-"};
    return {FormatSi(p.max_machine_load()),
            FormatSi(static_cast<uint64_t>(p.mean_machine_load() + 0.5)),
            Fixed(p.machine_balance(), 2)};
  };
  for (const PhaseStats& p : stats.phases) {
    TableRow row = {std::to_string(p.phase),
                    FormatSi(p.input_rows),
                    FormatSi(p.remote_msgs),
                    FormatSi(p.output_rows),
                    FormatSi(p.local_msgs),
                    Fixed(p.phase_blowup(), 1),
                    Fixed(p.local_per_remote(), 1),
                    FormatSi(p.max_output_rows_per_key),
                    FormatSi(p.max_local_msgs_per_key)};
    for (std::string& cell : machine_cells(p)) row.push_back(std::move(cell));
    rows.push_back(std::move(row));
  }
  if (stats.phases.size() > 1) {
    const PhaseStats t = stats.Totals();
    TableRow row = {"total",
                    FormatSi(t.input_rows),
                    FormatSi(t.remote_msgs),
                    FormatSi(t.output_rows),
                    FormatSi(t.local_msgs),
                    "",
                    "",
                    FormatSi(t.max_output_rows_per_key),
                    FormatSi(t.max_local_msgs_per_key)};
    for (std::string& cell : machine_cells(t)) row.push_back(std::move(cell));
    rows.push_back(std::move(row));
  }

  std::string out = "algorithm: " + stats.algorithm + "\n";
  AppendTable(rows, &out);
  out += "locality (excluding one message per input row): " +
         Fixed(100.0 * stats.LocalityFraction(), 1) + "% local\n";
  return out;
}

std::string StatsToJsonLines(const RunStats& stats) {
  std::string out;
  for (const PhaseStats& p : stats.phases) {
    nlohmann::ordered_json record;
    record["algorithm"] = stats.algorithm;
    record["phase"] = p.phase;
    record["input_rows"] = p.input_rows;
    record["remote_msgs"] = p.remote_msgs;
    record["output_rows"] = p.output_rows;
    record["local_msgs"] = p.local_msgs;
    record["phase_blowup"] = p.phase_blowup();
    record["local_per_remote"] = p.local_per_remote();
    record["max_output_rows_per_key"] = p.max_output_rows_per_key;
    record["max_local_msgs_per_key"] = p.max_local_msgs_per_key;
    record["machine_input_rows"] = p.machine_input_rows;
    record["machine_output_rows"] = p.machine_output_rows;
    record["machine_local_msgs"] = p.machine_local_msgs;
    out += record.dump() + "\n";
  }
  return out;
}

void WriteStatsFile(const std::string& path, const RunStats& stats) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create '" + path + "'");
  out << StatsToJsonLines(stats);
  out.flush();
  if (!out) throw IoError("error writing '" + path + "'");
}

}  // namespace cubemr
