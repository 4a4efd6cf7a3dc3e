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

#ifndef CUBEMR_ERROR_H_
#define CUBEMR_ERROR_H_

#include <stdexcept>
#include <string>

namespace cubemr {

// All library failures are reported as CubeError. The code lets the CLI map
// failures onto exit statuses without parsing messages.
class CubeError : public std::runtime_error {
 public:
  enum class Code {
    kInvalidArgument,
    kParse,
    kOverflow,
    kShape,
    kIo,
  };

  CubeError(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

inline CubeError InvalidArgument(const std::string& message) {
  return CubeError(CubeError::Code::kInvalidArgument, message);
}

inline CubeError ParseError(const std::string& message) {
  return CubeError(CubeError::Code::kParse, message);
}

inline CubeError IoError(const std::string& message) {
  return CubeError(CubeError::Code::kIo, message);
}

}  // namespace cubemr

#endif  // CUBEMR_ERROR_H_
