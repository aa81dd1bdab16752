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

#ifndef FAIRWE_CURVE_H_
#define FAIRWE_CURVE_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "fairwe/concepts.h"
#include "fairwe/population.h"

namespace fairwe {

struct Breakpoint {
  double w = 0.0;        // welfare level W(a)
  double revenue = 0.0;  // E[r c | A = a]
};

// One linear piece of the curve: the cells it fills (all sharing the same
// revenue-per-welfare ratio r / ubar) and that ratio.
struct CurveSegment {
  double slope = 0.0;
  std::vector<std::size_t> cells;
};

// Exact maximal conditional revenue of one group as a function of its
// welfare level, R_a*(w) on [0, E[u | A = a]].
//
// The curve is the greedy prefix envelope of a fractional knapsack: cells
// with positive mean utility are filled in decreasing order of r / ubar.
// Cells of equal ratio share one segment, so segment slopes are strictly
// decreasing and breakpoint welfare strictly increasing.
struct ConcaveCurve {
  Group group = Group::k0;
  // Revenue from cells with ubar = 0 and r > 0; they are approved at every
  // welfare level.
  double baseline = 0.0;
  std::vector<std::size_t> baseline_cells;
  std::vector<Breakpoint> breakpoints;  // breakpoints.front() = (0, baseline)
  std::vector<CurveSegment> segments;   // segments.size() = breakpoints - 1

  double w_max() const { return breakpoints.back().w; }

  // R_a*(w); throws kWOutOfDomain outside [0, w_max].
  double Evaluate(double w) const;

  // Superdifferential [lo, hi] at w. Unbounded sides at the domain ends are
  // reported as -inf / +inf.
  std::pair<double, double> Supergradient(double w) const;
};

ConcaveCurve WelfareCurve(const Population& pop, const UtilityTable& u,
                          Group g);

}  // namespace fairwe

#endif  // FAIRWE_CURVE_H_
