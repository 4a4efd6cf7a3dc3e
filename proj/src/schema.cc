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

#include "cubemr/schema.h"

#include <set>
#include <utility>

#include "cubemr/error.h"

namespace cubemr {

void ValidateSchema(const std::vector<Dimension>& dimensions,
                    const std::string& metric_name) {
  if (dimensions.empty()) {
    throw InvalidArgument("schema has no dimensions");
  }
  if (metric_name.empty()) {
    throw InvalidArgument("schema has an empty metric name");
  }
  std::set<std::string> dimension_names;
  std::set<std::string> column_names;
  for (const Dimension& dimension : dimensions) {
    if (dimension.name.empty()) {
      throw InvalidArgument("dimension with empty name");
    }
    if (!dimension_names.insert(dimension.name).second) {
      throw InvalidArgument("duplicate dimension name '" + dimension.name +
                            "'");
    }
    if (dimension.columns.empty()) {
      throw InvalidArgument("dimension '" + dimension.name +
                            "' has no columns");
    }
    for (const std::string& column : dimension.columns) {
      if (column.empty()) {
        throw InvalidArgument("dimension '" + dimension.name +
                              "' has a column with an empty name");
      }
      if (!column_names.insert(column).second) {
        throw InvalidArgument("duplicate column name '" + column + "'");
      }
    }
  }
  if (column_names.count(metric_name) > 0) {
    throw InvalidArgument("metric name '" + metric_name +
                          "' collides with a column name");
  }
}

Schema Schema::Make(std::vector<Dimension> dimensions,
                    std::string metric_name) {
  ValidateSchema(dimensions, metric_name);
  Schema schema;
  schema.dimensions_ = std::move(dimensions);
  schema.metric_name_ = std::move(metric_name);
  for (size_t d = 0; d < schema.dimensions_.size(); ++d) {
    const size_t width = schema.dimensions_[d].columns.size();
    schema.dimension_begin_.push_back(schema.dimension_begin_.back() + width);
    schema.dimension_of_column_.insert(schema.dimension_of_column_.end(),
                                       width, d);
  }
  return schema;
}

std::vector<std::string> Schema::column_names() const {
  std::vector<std::string> names;
  names.reserve(num_columns());
  for (const Dimension& dimension : dimensions_) {
    names.insert(names.end(), dimension.columns.begin(),
                 dimension.columns.end());
  }
  return names;
}

std::optional<size_t> Schema::FindDimension(const std::string& name) const {
  for (size_t d = 0; d < dimensions_.size(); ++d) {
    if (dimensions_[d].name == name) return d;
  }
  return std::nullopt;
}

Schema Schema::Slice(size_t first, size_t last) const {
  return Make({dimensions_.begin() + first, dimensions_.begin() + last},
              metric_name_);
}

}  // namespace cubemr
