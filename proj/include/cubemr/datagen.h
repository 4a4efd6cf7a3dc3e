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

#ifndef CUBEMR_DATAGEN_H_
#define CUBEMR_DATAGEN_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cubemr/config.h"
#include "cubemr/dictionary.h"
#include "cubemr/schema.h"
#include "cubemr/segment_key.h"

namespace cubemr {

// Rank-frequency (Zipf) sampler over ranks [0, n): P(r) ∝ 1 / (r + 1)^s.
// s = 0 is uniform.
class ZipfSampler {
 public:
  ZipfSampler(uint64_t n, double exponent);

  uint64_t size() const { return cdf_.size(); }
  // Maps 64 random bits to a rank. Uses the top 53 bits as a uniform double
  // so results do not depend on the standard library's distributions.
  uint64_t Sample(uint64_t bits) const;

 private:
  std::vector<double> cdf_;
};

struct GeneratorOptions {
  size_t rows = 0;
  std::vector<uint64_t> cardinalities;  // per column, >= 1
  std::vector<double> skew;             // per dimension, >= 0
  uint64_t seed = 0;
  Count min_count = 1;
  Count max_count = 100;
};

inline constexpr uint64_t kDefaultCardinality = 10;

// Options from a config: columns without a [cardinality] entry get
// kDefaultCardinality, dimensions without a [skew] entry get default_skew.
GeneratorOptions OptionsFromConfig(const CubeConfig& config, size_t rows,
                                   double default_skew, uint64_t seed);

// Draws rows, independently per dimension. A dimension's top column picks
// value index r ~ Zipf(s, cardinality). Each lower column picks a child rank
// c ~ Zipf(s, fanout) with fanout = ceil(card / parent_card) and takes index
// (parent_index * fanout + c) mod card, so every parent prefix owns a fixed
// set of children. Values are named "<column>_<index>". The dictionary ends
// up canonical. Throws CubeError(kInvalidArgument) on bad options.
std::vector<Row> GenerateRows(const Schema& schema,
                              const GeneratorOptions& options,
                              ValueDictionary* dictionary);

// GenerateRows followed by WriteDataset.
void GenerateDataset(const std::string& path, const Schema& schema,
                     const GeneratorOptions& options);

}  // namespace cubemr

#endif  // CUBEMR_DATAGEN_H_
