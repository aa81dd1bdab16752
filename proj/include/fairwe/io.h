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

#ifndef FAIRWE_IO_H_
#define FAIRWE_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "fairwe/analytics.h"
#include "fairwe/classifier.h"
#include "fairwe/concepts.h"
#include "fairwe/curve.h"
#include "fairwe/population.h"
#include "fairwe/solver.h"

namespace fairwe {

using Json = nlohmann::ordered_json;

// Files are UTF-8 with LF line endings and '.' as the decimal separator.
// Malformed syntax raises kParseError, unreadable files kIoError; semantic
// problems raise the validation codes of the owning module.

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& contents);

// {"cells": [{"x", "a", "mass", "p", "alpha_plus", "alpha_minus"}, ...]}
Population PopulationFromJson(const Json& json);
Json ToJson(const Population& pop);

// {"kind": "demographic_parity" | "equal_opportunity" |
//  "equalized_odds_member" (alpha, beta) | "heterogeneous_eo" (m) |
//  "custom" (u: [{"x", "a", "y", "value"}])}.
// eo_unnormalized switches both EO variants to the raw 1{y = 1} form.
ConceptSpec ConceptFromJson(const Json& json, bool eo_unnormalized = false);
Json ToJson(const ConceptSpec& spec);

// Header `x,a,y[,weight]` in any column order; weight defaults to 1.
std::vector<SampleRow> ParseSamplesCsv(std::istream& in);

// {"<x label>": {"alpha_plus": .., "alpha_minus": ..}, ...}
AlphaTable AlphaTableFromJson(const Json& json);

// Fixed "%.12g" rendering used by every CSV writer.
std::string FormatNumber(double value);

// Header `x,a,c`, one row per cell in population order.
void WriteClassifierCsv(std::ostream& out, const Classifier& c);
// Header `w,R`, one row per breakpoint.
void WriteCurveCsv(std::ostream& out, const ConcaveCurve& curve);
// Header `w,F`: P(A=0) R_0*(w) + P(A=1) R_1*(w) at every breakpoint of
// either curve inside the common welfare domain.
void WriteObjectiveCsv(std::ostream& out, const Population& pop,
                       const ConcaveCurve& c0, const ConcaveCurve& c1);

Json ToJson(const Classifier& c);
Json ToJson(const WeSolveResult& result);
Json ToJson(const AuditReport& report);
Json ToJson(const TheoremCheck& check);
Json ToJson(const RobustnessReport& report);
Json ToJson(const PriceOfFairness& report);

}  // namespace fairwe

#endif  // FAIRWE_IO_H_
