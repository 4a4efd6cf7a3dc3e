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

// cubemr: materialize, verify and generate data cubes.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 runtime error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cubemr/batched.h"
#include "cubemr/broadcast.h"
#include "cubemr/config.h"
#include "cubemr/cube_io.h"
#include "cubemr/datagen.h"
#include "cubemr/dataset_io.h"
#include "cubemr/error.h"
#include "cubemr/layered.h"
#include "cubemr/stats_report.h"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct MaterializeFlags {
  std::string config;
  std::string input;
  std::string output;
  std::string algorithm = "batched";
  size_t machines = 16;
  uint64_t seed = 0;
  std::optional<int64_t> threshold;
  std::string stats;
  size_t workers = 1;
  size_t spill_threshold = cubemr::kDefaultSpillThreshold;
};

struct VerifyFlags {
  std::string a;
  std::string b;
  size_t max_shown = 10;
};

struct GenerateFlags {
  std::string config;
  size_t rows = 0;
  double skew = 1.0;
  uint64_t seed = 0;
  std::string output;
};

int RunMaterialize(const MaterializeFlags& flags) {
  const cubemr::CubeConfig config = cubemr::LoadConfig(flags.config);
  cubemr::ValueDictionary dictionary;
  const std::vector<cubemr::Row> rows =
      cubemr::ReadDataset(flags.input, config.schema, &dictionary);

  cubemr::SimConfig sim;
  sim.machines = flags.machines;
  sim.seed = flags.seed;
  sim.workers = flags.workers;
  sim.spill_threshold = flags.spill_threshold;

  cubemr::Materialization result;
  if (flags.algorithm == "broadcast") {
    result = cubemr::BroadcastMaterialize(config.schema, rows);
  } else if (flags.algorithm == "layered") {
    result = cubemr::LayeredMaterialize(config.schema, rows, sim);
  } else {
    result = cubemr::BatchedMaterialize(config.schema, config.grouping, rows,
                                        sim);
  }

  const size_t written =
      cubemr::WriteCube(flags.output, config.schema, dictionary, result.cube,
                        flags.threshold);
  std::cout << cubemr::RenderStats(result.stats);
  std::cout << "cube: " << result.cube.size() << " segments, " << written
            << " written to " << flags.output << "\n";
  if (!flags.stats.empty()) cubemr::WriteStatsFile(flags.stats, result.stats);
  return 0;
}

int RunVerify(const VerifyFlags& flags) {
  const std::vector<cubemr::Discrepancy> diffs =
      cubemr::DiffCubes(flags.a, flags.b);
  if (diffs.empty()) {
    std::cout << "cubes are identical\n";
    return 0;
  }
  auto show = [](const std::optional<int64_t>& c) {
    return c ? std::to_string(*c) : std::string("missing");
  };
  std::cout << diffs.size() << " discrepancies\n";
  for (size_t i = 0; i < diffs.size() && i < flags.max_shown; ++i) {
    std::cout << "  " << cubemr::FormatTextKey(diffs[i].key) << ": "
              << show(diffs[i].a) << " vs " << show(diffs[i].b) << "\n";
  }
  return kExitMismatch;
}

int RunGenerate(const GenerateFlags& flags) {
  const cubemr::CubeConfig config = cubemr::LoadConfig(flags.config);
  cubemr::GenerateDataset(
      flags.output, config.schema,
      cubemr::OptionsFromConfig(config, flags.rows, flags.skew, flags.seed));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Data cube materialization on a simulated MapReduce"};
  app.require_subcommand(1);

  MaterializeFlags mat;
  CLI::App* materialize =
      app.add_subcommand("materialize", "Materialize the cube of a dataset");
  materialize->add_option("--config", mat.config, "Cube config file")->required();
  materialize->add_option("--input", mat.input, "Dataset TSV file")->required();
  materialize->add_option("--output", mat.output, "Cube TSV file to write")
      ->required();
  materialize->add_option("--algorithm", mat.algorithm, "Engine to run")
      ->check(CLI::IsMember({"broadcast", "layered", "batched"}))
      ->capture_default_str();
  materialize->add_option("--machines", mat.machines, "Simulated machines")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  materialize->add_option("--seed", mat.seed, "Shard hash seed")
      ->capture_default_str();
  materialize->add_option("--threshold", mat.threshold,
                          "Only write segments with |count| >= threshold");
  materialize->add_option("--stats", mat.stats,
                          "Write per-phase stats as JSON lines");
  materialize->add_option("--workers", mat.workers, "Reducer threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  materialize->add_option("--spill-threshold", mat.spill_threshold,
                          "Rows kept in memory between phases before spilling")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  VerifyFlags ver;
  CLI::App* verify =
      app.add_subcommand("verify", "Compare two cube files (exit 1 on mismatch)");
  verify->add_option("a", ver.a, "First cube file")->required();
  verify->add_option("b", ver.b, "Second cube file")->required();
  verify->add_option("--max-shown", ver.max_shown,
                     "Discrepancies to print")
      ->capture_default_str();

  GenerateFlags gen;
  CLI::App* generate =
      app.add_subcommand("generate", "Generate a seeded synthetic dataset");
  generate->add_option("--config", gen.config, "Cube config file")->required();
  generate->add_option("--rows", gen.rows, "Number of rows")->required();
  generate->add_option("--skew", gen.skew,
                       "Zipf exponent for dimensions without a [skew] entry")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Random seed")->required();
  generate->add_option("--output", gen.output, "Dataset TSV file to write")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (materialize->parsed()) return RunMaterialize(mat);
    if (verify->parsed()) return RunVerify(ver);
    return RunGenerate(gen);
  } catch (const cubemr::CubeError& e) {
    std::cerr << "cubemr: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "cubemr: " << e.what() << "\n";
    return kExitRuntime;
  }
}
