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

#include "odiam/error.hpp"

namespace odiam {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kEmptySourceSet: return "EmptySourceSet";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kUnorientedEdgesPresent: return "UnorientedEdgesPresent";
    case ErrorCode::kEmptyContractionSet: return "EmptyContractionSet";
    case ErrorCode::kSameVertex: return "SameVertex";
    case ErrorCode::kNotBridgeless: return "NotBridgeless";
    case ErrorCode::kMinDegreeTooSmall: return "MinDegreeTooSmall";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNoFarVertex: return "NoFarVertex";
    case ErrorCode::kNoConsistentPath: return "NoConsistentPath";
    case ErrorCode::kNoPartner: return "NoPartner";
    case ErrorCode::kCaseFallthrough: return "CaseFallthrough";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kVertexTooFar: return "VertexTooFar";
    case ErrorCode::kCoreNotStrong: return "CoreNotStrong";
    case ErrorCode::kBoundViolated: return "BoundViolated";
    case ErrorCode::kNoEar: return "NoEar";
    case ErrorCode::kTooManyEdges: return "TooManyEdges";
    case ErrorCode::kNoStrongOrientation: return "NoStrongOrientation";
    case ErrorCode::kEmptyList: return "EmptyList";
    case ErrorCode::kDeltaTooSmall: return "DeltaTooSmall";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kConstructionFailed: return "ConstructionFailed";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace odiam
