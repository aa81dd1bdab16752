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

#include "fairwe/curve.h"

#include <algorithm>
#include <limits>
#include <string>

#include "fairwe/error.h"

namespace fairwe {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Item {
  std::size_t cell;
  double ratio;
  double dw;
  double dr;
};

}  // namespace

ConcaveCurve WelfareCurve(const Population& pop, const UtilityTable& u,
                          Group g) {
  RequireDomain(pop, u);
  ConcaveCurve curve;
  curve.group = g;

  std::vector<Item> items;
  for (std::size_t i : pop.group_cells(g)) {
    const double q = pop.conditional_mass(i);
    const double ubar = u.mean(pop, i);
    const double r = pop.margin(i);
    if (ubar == 0.0) {
      if (r > 0.0 && q > 0.0) {
        curve.baseline += q * r;
        curve.baseline_cells.push_back(i);
      }
      continue;
    }
    // Zero-mass cells move neither welfare nor revenue.
    if (q == 0.0) continue;
    items.push_back(Item{i, r / ubar, q * ubar, q * r});
  }
  // Cell indices follow key order, so a stable sort breaks ratio ties
  // lexicographically.
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& l, const Item& r) { return l.ratio > r.ratio; });

  curve.breakpoints.push_back({0.0, curve.baseline});
  double w = 0.0;
  double revenue = curve.baseline;
  for (std::size_t k = 0; k < items.size();) {
    CurveSegment segment;
    segment.slope = items[k].ratio;
    for (; k < items.size() && items[k].ratio == segment.slope; ++k) {
      w += items[k].dw;
      revenue += items[k].dr;
      segment.cells.push_back(items[k].cell);
    }
    curve.segments.push_back(std::move(segment));
    curve.breakpoints.push_back({w, revenue});
  }
  return curve;
}

double ConcaveCurve::Evaluate(double w) const {
  if (!(w >= 0.0 && w <= w_max())) {
    throw Error(ErrorCode::kWOutOfDomain,
                "w=" + std::to_string(w) + " outside [0, " +
                    std::to_string(w_max()) + "]");
  }
  auto it = std::upper_bound(
      breakpoints.begin(), breakpoints.end(), w,
      [](double value, const Breakpoint& b) { return value < b.w; });
  const std::size_t k = static_cast<std::size_t>(it - breakpoints.begin()) - 1;
  if (breakpoints[k].w == w || k + 1 == breakpoints.size()) {
    return breakpoints[k].revenue;
  }
  return breakpoints[k].revenue + segments[k].slope * (w - breakpoints[k].w);
}

std::pair<double, double> ConcaveCurve::Supergradient(double w) const {
  if (!(w >= 0.0 && w <= w_max())) {
    throw Error(ErrorCode::kWOutOfDomain, "w=" + std::to_string(w));
  }
  auto it = std::upper_bound(
      breakpoints.begin(), breakpoints.end(), w,
      [](double value, const Breakpoint& b) { return value < b.w; });
  const std::size_t k = static_cast<std::size_t>(it - breakpoints.begin()) - 1;
  if (breakpoints[k].w != w) {
    return {segments[k].slope, segments[k].slope};
  }
  const double left = k == 0 ? kInf : segments[k - 1].slope;
  const double right = k < segments.size() ? segments[k].slope : -kInf;
  return {right, left};
}

}  // namespace fairwe
