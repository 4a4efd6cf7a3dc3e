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

#ifndef CUBEMR_CONFIG_H_
#define CUBEMR_CONFIG_H_

// Cube configuration files.
//
//   # comment
//   [metric]
//   count
//
//   [dimensions]              # one dimension per line, highest level first
//   region = country state city
//   query_category = query_category
//   advertiser = advertiser
//
//   [grouping]                # optional; one group per line, G_g first
//   region
//   query_category advertiser
//
//   [cardinality]             # optional, used by the generator
//   country = 4
//
//   [skew]                    # optional, per dimension, used by the generator
//   advertiser = 1.0
//
// Without a [grouping] section every column forms a single group.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cubemr/batched.h"
#include "cubemr/schema.h"

namespace cubemr {

struct CubeConfig {
  Schema schema;
  Grouping grouping;
  // Dimension names per group, G_g first. Empty when no [grouping] given.
  std::vector<std::vector<std::string>> group_names;
  std::map<std::string, uint64_t> cardinality;  // by column
  std::map<std::string, double> skew;           // by dimension
};

// Parses config text. Errors carry "<source>:<line>:" context. Schema and
// grouping validation errors are raised as CubeError(kInvalidArgument).
CubeConfig ParseConfig(const std::string& text, const std::string& source);

CubeConfig LoadConfig(const std::string& path);

}  // namespace cubemr

#endif  // CUBEMR_CONFIG_H_
