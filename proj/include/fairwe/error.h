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

#ifndef FAIRWE_ERROR_H_
#define FAIRWE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fairwe {

enum class ErrorCode {
  // Population validation and ingestion.
  kMassNotNormalized,
  kNegativeMass,
  kProbabilityOutOfRange,
  kNonPositiveAlpha,
  kEmptyGroup,
  kInconsistentAlphaAcrossGroups,
  kDuplicateCell,
  kInvalidGroup,
  kEmptyInput,
  kMissingAlphaEntry,
  kZeroBins,
  kConstantFeatureWithQuantiles,
  // Utilities and fairness concepts.
  kInvalidConcept,
  kNoGoodBorrowersInGroup,
  kNegativeUtility,
  kZeroClassifierNotWE,
  kUndefinedConditional,
  // Solvers and evaluation.
  kUtilityDomainMismatch,
  kDomainMismatch,
  kInvalidClassifierValue,
  kBracketNotFound,
  kInvalidArgument,
  // Oracle.
  kInstanceTooLarge,
  kWOutOfDomain,
  // File handling.
  kIoError,
  kParseError,
};

// Stable, human-readable name of an error code ("MassNotNormalized", ...).
std::string_view ErrorName(ErrorCode code);

// The single exception type thrown by the library. The code is meant for
// programmatic dispatch; what() carries "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fairwe

#endif  // FAIRWE_ERROR_H_
