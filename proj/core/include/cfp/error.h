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

#ifndef CFP_ERROR_H_
#define CFP_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfp {

// Every failure surfaced by the library carries one of these codes. Codes
// that signal a violated precondition of a structural result (claims,
// decompositions) are bugs in the caller's input, never transient.
enum class ErrorCode {
  kLoopRejected,
  kUnknownEdge,
  kUnknownVertex,
  kTooLarge,
  kNotDecomposable,
  kNoBridges,
  kClassificationFailed,
  kClaimViolation,
  kPlesnikViolated,
  kNotK4,
  kNotRing,
  kBadAnchor,
  kBadContext,
  kAnchorOnTriangle,
  kNotClawFree,
  kNotCubic,
  kNotConnected,
  kNotSimple,
  kPartialColoring,
  kBadSpec,
  kBadCount,
  kInvalidPlan,
  kGenerationFailed,
  kMalformedGraph6,
  kMalformedDocument,
  kColoringFailed,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cfp

#endif  // CFP_ERROR_H_
