// Copyright 2026 The odiam Authors
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

#ifndef ODIAM_ERROR_HPP_
#define ODIAM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace odiam {

enum class ErrorCode {
  kInvalidArgument,
  kIndexOutOfRange,
  kSelfLoop,
  kEmptySourceSet,
  kEmptyGraph,
  kUnorientedEdgesPresent,
  kEmptyContractionSet,
  kSameVertex,
  kNotBridgeless,
  kMinDegreeTooSmall,
  kDisconnected,
  kNoFarVertex,
  kNoConsistentPath,
  kNoPartner,
  kCaseFallthrough,
  kInvariantViolation,
  kVertexTooFar,
  kCoreNotStrong,
  kBoundViolated,
  kNoEar,
  kTooManyEdges,
  kNoStrongOrientation,
  kEmptyList,
  kDeltaTooSmall,
  kKTooSmall,
  kConstructionFailed,
  kParseError,
  kIoError,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception type. The C API
// translates the code into an odiam_status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace odiam

#endif  // ODIAM_ERROR_HPP_
