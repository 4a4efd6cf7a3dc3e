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

#ifndef CUBEMR_DATASET_IO_H_
#define CUBEMR_DATASET_IO_H_

// Tab-separated text files. The first line holds the column names followed
// by the metric name. A cell that is exactly `*` means ALL. Inside values a
// backslash is written `\\` and an asterisk `\*`; values may not contain
// tabs, carriage returns or newlines. With these rules every value has one
// encoding and no value encodes to a bare `*`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubemr/dictionary.h"
#include "cubemr/schema.h"
#include "cubemr/segment_key.h"

namespace cubemr {

inline constexpr std::string_view kAllCell = "*";

// Throws CubeError(kInvalidArgument) for values holding tab or newline.
std::string EncodeCell(std::string_view value);

// nullopt for the ALL cell. Throws CubeError(kParse) on a bad escape.
std::optional<std::string> DecodeCell(std::string_view cell);

// Splits one line on tabs. A trailing '\r' is dropped.
std::vector<std::string_view> SplitTsvLine(std::string_view line);

// Parses a signed 64-bit metric cell. Throws CubeError(kParse).
Count ParseCount(std::string_view cell);

// Header line (without newline) for `schema`.
std::string TsvHeader(const Schema& schema);

// Reads a dataset file. Values are interned into *dictionary, which is then
// canonicalized (ids follow value byte order) and the rows remapped.
// Throws CubeError(kParse) with file and line on malformed input, including
// a bare `*` in a value cell, and CubeError(kIo) if the file can't be read.
std::vector<Row> ReadDataset(const std::string& path, const Schema& schema,
                             ValueDictionary* dictionary);

void WriteDataset(const std::string& path, const Schema& schema,
                  const ValueDictionary& dictionary,
                  const std::vector<Row>& rows);

}  // namespace cubemr

#endif  // CUBEMR_DATASET_IO_H_
