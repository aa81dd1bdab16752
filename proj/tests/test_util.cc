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

#include "test_util.h"

#include <cmath>
#include <sstream>

#include "fairwe/analytics.h"

namespace fairwe::testing {

std::string CheckCurve(const ConcaveCurve& curve) {
  std::ostringstream msg;
  if (curve.breakpoints.empty() ||
      curve.segments.size() + 1 != curve.breakpoints.size()) {
    return "malformed curve";
  }
  if (curve.breakpoints.front().w != 0.0 ||
      curve.breakpoints.front().revenue != curve.baseline) {
    return "curve does not start at (0, baseline)";
  }
  for (std::size_t k = 0; k < curve.segments.size(); ++k) {
    const Breakpoint& a = curve.breakpoints[k];
    const Breakpoint& b = curve.breakpoints[k + 1];
    if (!(b.w > a.w)) {
      msg << "welfare not increasing at breakpoint " << k + 1;
      return msg.str();
    }
    if (k > 0 && !(curve.segments[k].slope < curve.segments[k - 1].slope)) {
      msg << "slope not decreasing at segment " << k;
      return msg.str();
    }
    const double differenced = (b.revenue - a.revenue) / (b.w - a.w);
    const double slope = curve.segments[k].slope;
    if (std::abs(differenced - slope) > 1e-9 * std::max(1.0, std::abs(slope))) {
      msg << "segment " << k << " slope " << slope
          << " disagrees with breakpoints " << differenced;
      return msg.str();
    }
  }
  return {};
}

std::string CheckWeResult(const Population& pop, const UtilityTable& u,
                          const WeSolveResult& result) {
  std::ostringstream msg;
  const double w0 = GroupWelfare(pop, u, result.classifier, Group::k0);
  const double w1 = GroupWelfare(pop, u, result.classifier, Group::k1);
  if (std::abs(w0 - w1) > 1e-9) {
    msg << "welfare gap " << std::abs(w0 - w1);
    return msg.str();
  }
  if (std::abs(w0 - result.w_star) > 1e-9 ||
      std::abs(w1 - result.w_star) > 1e-9) {
    msg << "welfare (" << w0 << ", " << w1 << ") differs from w* "
        << result.w_star;
    return msg.str();
  }
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const double lambda = result.lambda[Index(pop.cell(i).a)];
    const double residual = pop.margin(i) - lambda * u.mean(pop, i);
    const double c = result.classifier[i];
    const bool bad = (c > 0.0 && c < 1.0 && std::abs(residual) > 1e-9) ||
                     (residual > 1e-9 && c != 1.0) ||
                     (residual < -1e-9 && c != 0.0);
    if (bad) {
      msg << "threshold rule broken at " << ToString(pop.key(i)) << ": c=" << c
          << " r-lambda*ubar=" << residual;
      return msg.str();
    }
  }
  return {};
}

}  // namespace fairwe::testing
