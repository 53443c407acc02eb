// Copyright 2026 The gngshape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace gngshape {

// Error categories. The numeric values double as CLI exit codes.
enum class ErrorCode {
  kUsage = 1,
  kData = 2,
  kInvariant = 3,
};

inline const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage:
      return "usage";
    case ErrorCode::kData:
      return "data";
    case ErrorCode::kInvariant:
      return "invariant";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline Error UsageError(const std::string& what) {
  return Error(ErrorCode::kUsage, what);
}
inline Error DataError(const std::string& what) {
  return Error(ErrorCode::kData, what);
}
inline Error InvariantError(const std::string& what) {
  return Error(ErrorCode::kInvariant, what);
}

}  // namespace gngshape
