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

#ifndef FAIRWE_TESTS_TEST_UTIL_H_
#define FAIRWE_TESTS_TEST_UTIL_H_

#include <optional>
#include <string>

#include "fairwe/concepts.h"
#include "fairwe/curve.h"
#include "fairwe/error.h"
#include "fairwe/population.h"
#include "fairwe/solver.h"

namespace fairwe::testing {

// Structural checks shared by the unit and acceptance suites. Each returns
// an empty string on success and a description of the first violation
// otherwise.

// Segment slopes strictly decreasing, welfare strictly increasing, and the
// breakpoint differences consistent with the stored slopes.
std::string CheckCurve(const ConcaveCurve& curve);

// |W(0) - W(1)| <= 1e-9, W(a) = w* within 1e-9, and the per-group threshold
// rule r vs lambda_a ubar holds with a 1e-9 margin.
std::string CheckWeResult(const Population& pop, const UtilityTable& u,
                          const WeSolveResult& result);

// Runs fn and returns the code of the fairwe::Error it throws, if any.
template <typename Fn>
std::optional<ErrorCode> ErrorCodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace fairwe::testing

#endif  // FAIRWE_TESTS_TEST_UTIL_H_
