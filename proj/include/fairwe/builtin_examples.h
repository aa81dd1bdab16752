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

#ifndef FAIRWE_BUILTIN_EXAMPLES_H_
#define FAIRWE_BUILTIN_EXAMPLES_H_

#include <string>
#include <string_view>
#include <vector>

#include "fairwe/population.h"

namespace fairwe {

// Two binary attributes, uniform cells, p = [[0.4, 0.6], [0, 1]] (rows are
// groups), alpha_+ = 1, alpha_- = 2.
Population LendingExample();

// p = [[2/3, 1/3], [1/3, 2/3]], uniform cells, alpha_+ = 1 - t and
// alpha_- = t so that the threshold equals t.
Population UnawarenessExample(double threshold = 0.6);

// Ternary x, uniform cells, p = [[3/4, 3/4, 1/4], [1, 0, 0]].
// alpha_+ = 2, alpha_- = 3 (threshold 3/5).
Population ParityHarmExample();

// Same repayment table as ParityHarmExample with threshold t (default 0.7).
Population OpportunityHarmExample(double threshold = 0.7);

struct ExampleCheck {
  std::string example;
  std::string description;
  double expected = 0.0;
  double computed = 0.0;
  // When true the check is computed < expected instead of equality.
  bool strictly_below = false;
  bool pass = false;
};

// Runs the named built-in instance ("ex1", "unaware", "dp_harm", "eo_harm"
// or "all") and compares every reported quantity with its known value.
std::vector<ExampleCheck> RunBuiltinExample(std::string_view which,
                                            double tol = 1e-9);

// Population for "ex1", "unaware", "dp_harm" or "eo_harm".
Population BuiltinPopulation(std::string_view which);

}  // namespace fairwe

#endif  // FAIRWE_BUILTIN_EXAMPLES_H_
