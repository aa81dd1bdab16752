// Copyright 2026 The fairwe Authors.
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

#include "fairwe/error.h"

namespace fairwe {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMassNotNormalized:
      return "MassNotNormalized";
    case ErrorCode::kNegativeMass:
      return "NegativeMass";
    case ErrorCode::kProbabilityOutOfRange:
      return "ProbabilityOutOfRange";
    case ErrorCode::kNonPositiveAlpha:
      return "NonPositiveAlpha";
    case ErrorCode::kEmptyGroup:
      return "EmptyGroup";
    case ErrorCode::kInconsistentAlphaAcrossGroups:
      return "InconsistentAlphaAcrossGroups";
    case ErrorCode::kDuplicateCell:
      return "DuplicateCell";
    case ErrorCode::kInvalidGroup:
      return "InvalidGroup";
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
    case ErrorCode::kMissingAlphaEntry:
      return "MissingAlphaEntry";
    case ErrorCode::kZeroBins:
      return "ZeroBins";
    case ErrorCode::kConstantFeatureWithQuantiles:
      return "ConstantFeatureWithQuantiles";
    case ErrorCode::kInvalidConcept:
      return "InvalidConcept";
    case ErrorCode::kNoGoodBorrowersInGroup:
      return "NoGoodBorrowersInGroup";
    case ErrorCode::kNegativeUtility:
      return "NegativeUtility";
    case ErrorCode::kZeroClassifierNotWE:
      return "ZeroClassifierNotWE";
    case ErrorCode::kUndefinedConditional:
      return "UndefinedConditional";
    case ErrorCode::kUtilityDomainMismatch:
      return "UtilityDomainMismatch";
    case ErrorCode::kDomainMismatch:
      return "DomainMismatch";
    case ErrorCode::kInvalidClassifierValue:
      return "InvalidClassifierValue";
    case ErrorCode::kBracketNotFound:
      return "BracketNotFound";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInstanceTooLarge:
      return "InstanceTooLarge";
    case ErrorCode::kWOutOfDomain:
      return "WOutOfDomain";
    case ErrorCode::kIoError:
      return "IoError";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(ErrorName(code)) +
                         (detail.empty() ? "" : ": " + detail)),
      code_(code) {}

}  // namespace fairwe
