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

#include "cubemr/datagen.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "cubemr/dataset_io.h"
#include "cubemr/error.h"

namespace cubemr {

ZipfSampler::ZipfSampler(uint64_t n, double exponent) {
  if (n == 0) throw InvalidArgument("Zipf support must be non-empty");
  if (!std::isfinite(exponent) || exponent < 0) {
    throw InvalidArgument("Zipf exponent must be a finite value >= 0");
  }
  cdf_.resize(n);
  double total = 0;
  for (uint64_t r = 0; r < n; ++r) {
    total += std::pow(static_cast<double>(r + 1), -exponent);
    cdf_[r] = total;
  }
  for (double& c : cdf_) c /= total;
  cdf_.back() = 1.0;
}

uint64_t ZipfSampler::Sample(uint64_t bits) const {
  const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return std::min<uint64_t>(it - cdf_.begin(), cdf_.size() - 1);
}

GeneratorOptions OptionsFromConfig(const CubeConfig& config, size_t rows,
                                   double default_skew, uint64_t seed) {
  GeneratorOptions options;
  options.rows = rows;
  options.seed = seed;
  for (const std::string& column : config.schema.column_names()) {
    auto it = config.cardinality.find(column);
    options.cardinalities.push_back(it == config.cardinality.end()
                                        ? kDefaultCardinality
                                        : it->second);
  }
  for (const Dimension& dimension : config.schema.dimensions()) {
    auto it = config.skew.find(dimension.name);
    options.skew.push_back(it == config.skew.end() ? default_skew : it->second);
  }
  return options;
}

std::vector<Row> GenerateRows(const Schema& schema,
                              const GeneratorOptions& options,
                              ValueDictionary* dictionary) {
  const size_t width = schema.num_columns();
  if (options.cardinalities.size() != width) {
    throw InvalidArgument("need one cardinality per column");
  }
  if (options.skew.size() != schema.num_dimensions()) {
    throw InvalidArgument("need one skew exponent per dimension");
  }
  if (options.min_count > options.max_count) {
    throw InvalidArgument("min_count exceeds max_count");
  }
  for (uint64_t card : options.cardinalities) {
    if (card == 0) throw InvalidArgument("cardinality must be at least 1");
  }

  // Parent value p of a column with parent cardinality P owns the child
  // indices [p * card / P, (p + 1) * card / P). When card < P the range is
  // empty and the child index p * card / P is shared.
  std::vector<ZipfSampler> top(width, ZipfSampler(1, 0));
  std::vector<std::map<uint64_t, ZipfSampler>> children(width);
  auto child_range = [&](size_t c, uint64_t parent) {
    const uint64_t card = options.cardinalities[c];
    const uint64_t parents = options.cardinalities[c - 1];
    const uint64_t first = parent * card / parents;
    const uint64_t last = (parent + 1) * card / parents;
    return std::make_pair(first, std::max(last, first + 1));
  };
  for (size_t c = 0; c < width; ++c) {
    const size_t d = schema.dimension_of_column(c);
    if (c == schema.dimension_begin(d)) {
      top[c] = ZipfSampler(options.cardinalities[c], options.skew[d]);
      continue;
    }
    for (uint64_t p = 0; p < options.cardinalities[c - 1]; ++p) {
      const auto [first, last] = child_range(c, p);
      children[c].try_emplace(last - first, last - first, options.skew[d]);
    }
  }

  *dictionary = ValueDictionary(width);
  const std::vector<std::string> columns = schema.column_names();
  // Lazily interned ids per (column, value index).
  std::vector<std::vector<ValueId>> ids(width);
  for (size_t c = 0; c < width; ++c) ids[c].assign(options.cardinalities[c], kAll);

  const uint64_t span = static_cast<uint64_t>(options.max_count) -
                        static_cast<uint64_t>(options.min_count) + 1;
  std::mt19937_64 rng(options.seed);
  std::vector<Row> rows;
  rows.reserve(options.rows);
  std::vector<uint64_t> index(width);
  for (size_t i = 0; i < options.rows; ++i) {
    Row row;
    row.key = SegmentKey(width);
    for (size_t c = 0; c < width; ++c) {
      const size_t d = schema.dimension_of_column(c);
      if (c == schema.dimension_begin(d)) {
        index[c] = top[c].Sample(rng());
      } else {
        const auto [first, last] = child_range(c, index[c - 1]);
        index[c] = first + children[c].at(last - first).Sample(rng());
      }
      ValueId& id = ids[c][index[c]];
      if (id == kAll) {
        id = dictionary->Intern(c, columns[c] + "_" + std::to_string(index[c]));
      }
      row.key[c] = id;
    }
    const uint64_t offset = span == 0 ? rng() : rng() % span;
    row.count = static_cast<Count>(static_cast<uint64_t>(options.min_count) + offset);
    rows.push_back(std::move(row));
  }

  const auto remap = dictionary->Canonicalize();
  for (Row& row : rows) RemapKey(remap, row.key);
  return rows;
}

void GenerateDataset(const std::string& path, const Schema& schema,
                     const GeneratorOptions& options) {
  ValueDictionary dictionary;
  const std::vector<Row> rows = GenerateRows(schema, options, &dictionary);
  WriteDataset(path, schema, dictionary, rows);
}

}  // namespace cubemr
