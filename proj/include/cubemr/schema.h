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

#ifndef CUBEMR_SCHEMA_H_
#define CUBEMR_SCHEMA_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cubemr {

// A hierarchical dimension. columns[0] is the highest level.
struct Dimension {
  std::string name;
  std::vector<std::string> columns;

  friend bool operator==(const Dimension&, const Dimension&) = default;
};

// Throws CubeError(kInvalidArgument) unless the dimensions form a valid
// schema: at least one dimension, no empty dimension, unique dimension and
// column names, and a non-empty metric name distinct from every column.
void ValidateSchema(const std::vector<Dimension>& dimensions,
                    const std::string& metric_name);

// Ordered dimensions plus the metric name. Column positions 0..C-1 are
// assigned left to right in dimension order.
class Schema {
 public:
  Schema() = default;

  // Validates and builds. Throws CubeError on invalid input.
  static Schema Make(std::vector<Dimension> dimensions,
                     std::string metric_name);

  size_t num_dimensions() const { return dimensions_.size(); }
  size_t num_columns() const { return dimension_of_column_.size(); }
  const std::vector<Dimension>& dimensions() const { return dimensions_; }
  const Dimension& dimension(size_t d) const { return dimensions_[d]; }
  const std::string& metric_name() const { return metric_name_; }

  // Column range [dimension_begin(d), dimension_end(d)) of dimension d.
  size_t dimension_begin(size_t d) const { return dimension_begin_[d]; }
  size_t dimension_end(size_t d) const { return dimension_begin_[d + 1]; }
  size_t dimension_of_column(size_t column) const {
    return dimension_of_column_[column];
  }

  std::vector<std::string> column_names() const;
  std::optional<size_t> FindDimension(const std::string& name) const;

  // Schema made of dimensions [first, last).
  Schema Slice(size_t first, size_t last) const;

  friend bool operator==(const Schema& a, const Schema& b) {
    return a.dimensions_ == b.dimensions_ && a.metric_name_ == b.metric_name_;
  }

 private:
  std::vector<Dimension> dimensions_;
  std::string metric_name_;
  std::vector<size_t> dimension_begin_{0};
  std::vector<size_t> dimension_of_column_;
};

}  // namespace cubemr

#endif  // CUBEMR_SCHEMA_H_
