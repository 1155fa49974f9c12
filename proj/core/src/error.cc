// Copyright 2026 The cfp Authors
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

#include "cfp/error.h"

namespace cfp {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopRejected: return "LoopRejected";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotDecomposable: return "NotDecomposable";
    case ErrorCode::kNoBridges: return "NoBridges";
    case ErrorCode::kClassificationFailed: return "ClassificationFailed";
    case ErrorCode::kClaimViolation: return "ClaimViolation";
    case ErrorCode::kPlesnikViolated: return "PlesnikViolated";
    case ErrorCode::kNotK4: return "NotK4";
    case ErrorCode::kNotRing: return "NotRing";
    case ErrorCode::kBadAnchor: return "BadAnchor";
    case ErrorCode::kBadContext: return "BadContext";
    case ErrorCode::kAnchorOnTriangle: return "AnchorOnTriangle";
    case ErrorCode::kNotClawFree: return "NotClawFree";
    case ErrorCode::kNotCubic: return "NotCubic";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kPartialColoring: return "PartialColoring";
    case ErrorCode::kBadSpec: return "BadSpec";
    case ErrorCode::kBadCount: return "BadCount";
    case ErrorCode::kInvalidPlan: return "InvalidPlan";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kMalformedGraph6: return "MalformedGraph6";
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
    case ErrorCode::kColoringFailed: return "ColoringFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace cfp
