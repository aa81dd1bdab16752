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

#include "fairwe/solver.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "fairwe/analytics.h"
#include "fairwe/error.h"

namespace fairwe {
namespace {

// F'(w) above -kSlopeTolerance still counts as a plateau when choosing the
// largest maximizing welfare level.
constexpr double kSlopeTolerance = 1e-12;
constexpr double kTieTolerance = 1e-12;
constexpr int kMaxBracketDoublings = 128;

double SlopeAt(const ConcaveCurve& curve, double w) {
  auto it = std::upper_bound(
      curve.breakpoints.begin(), curve.breakpoints.end(), w,
      [](double value, const Breakpoint& b) { return value < b.w; });
  std::size_t k = static_cast<std::size_t>(it - curve.breakpoints.begin()) - 1;
  k = std::min(k, curve.segments.size() - 1);
  return curve.segments[k].slope;
}

double ClosestToZero(std::pair<double, double> interval) {
  return std::clamp(0.0, interval.first, interval.second);
}

// Greedy fill of one group up to welfare level w. Returns lambda_a and
// appends the fractional segment's cells to ties.
double FillGroup(const Population& pop, const UtilityTable& u,
                 const ConcaveCurve& curve, double w, Classifier& c,
                 std::vector<std::size_t>& fractional) {
  for (std::size_t i : curve.baseline_cells) c.set(i, 1.0);
  auto it = std::upper_bound(
      curve.breakpoints.begin(), curve.breakpoints.end(), w,
      [](double value, const Breakpoint& b) { return value < b.w; });
  const std::size_t k =
      static_cast<std::size_t>(it - curve.breakpoints.begin()) - 1;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i : curve.segments[j].cells) c.set(i, 1.0);
  }
  if (curve.breakpoints[k].w != w && k < curve.segments.size()) {
    const double span = curve.breakpoints[k + 1].w - curve.breakpoints[k].w;
    const double tau =
        std::clamp((w - curve.breakpoints[k].w) / span, 0.0, 1.0);
    for (std::size_t i : curve.segments[k].cells) {
      c.set(i, tau);
      fractional.push_back(i);
    }
  }
  const double lambda = ClosestToZero(curve.Supergradient(w));

  // Cells outside the sweep (zero mass, or zero mean utility without a
  // positive margin) follow the threshold rule directly.
  std::vector<bool> placed(pop.size(), false);
  for (std::size_t i : curve.baseline_cells) placed[i] = true;
  for (const CurveSegment& s : curve.segments) {
    for (std::size_t i : s.cells) placed[i] = true;
  }
  for (std::size_t i : pop.group_cells(curve.group)) {
    if (placed[i]) continue;
    c.set(i, pop.margin(i) > lambda * u.mean(pop, i) ? 1.0 : 0.0);
  }
  return lambda;
}

std::vector<TieCell> CollectTies(const Population& pop, const UtilityTable& u,
                                 const Classifier& c,
                                 const std::array<double, 2>& lambda,
                                 const std::vector<std::size_t>& forced) {
  std::vector<TieCell> ties;
  std::vector<bool> is_forced(pop.size(), false);
  for (std::size_t i : forced) is_forced[i] = true;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const double residual =
        pop.margin(i) - lambda[Index(pop.cell(i).a)] * u.mean(pop, i);
    if (is_forced[i] ||
        std::abs(residual) <= kTieTolerance * std::max(1.0, std::abs(pop.margin(i)))) {
      ties.push_back(TieCell{i, pop.key(i), c[i]});
    }
  }
  return ties;
}

void FillSummary(const Population& pop, const UtilityTable& u,
                 WeSolveResult& result) {
  result.revenue = Revenue(pop, result.classifier);
  for (Group g : kGroups) {
    result.welfare[Index(g)] = GroupWelfare(pop, u, result.classifier, g);
  }
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  return algorithm == Algorithm::kCurve ? "curve" : "bisection";
}

ThresholdSolution SolveUnconstrained(const Population& pop) {
  ThresholdSolution out{Classifier::Zero(pop), 0.0};
  for (std::size_t i = 0; i < pop.size(); ++i) {
    if (pop.cell(i).p > pop.threshold(i)) out.classifier.set(i, 1.0);
  }
  out.revenue = Revenue(pop, out.classifier);
  return out;
}

ThresholdSolution SolveUnaware(const Population& pop) {
  struct Pool {
    double mass = 0.0;
    double good = 0.0;
    double p_sum = 0.0;
    int count = 0;
    double threshold = 0.0;
  };
  std::map<std::string, Pool, std::less<>> pools;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const Cell& cell = pop.cell(i);
    Pool& pool = pools[cell.x];
    pool.mass += cell.mass;
    pool.good += cell.mass * cell.p;
    pool.p_sum += cell.p;
    ++pool.count;
    pool.threshold = pop.threshold(i);
  }
  ThresholdSolution out{Classifier::Zero(pop), 0.0};
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const Pool& pool = pools.find(pop.cell(i).x)->second;
    // A label with no mass in either group falls back to the plain average.
    const double pooled =
        pool.mass > 0.0 ? pool.good / pool.mass : pool.p_sum / pool.count;
    if (pooled > pool.threshold) out.classifier.set(i, 1.0);
  }
  out.revenue = Revenue(pop, out.classifier);
  return out;
}

WeSolveResult SolveWe(const Population& pop, const UtilityTable& u) {
  RequireDomain(pop, u);
  const std::array<ConcaveCurve, 2> curves = {
      WelfareCurve(pop, u, Group::k0), WelfareCurve(pop, u, Group::k1)};
  const double w_common = std::min(curves[0].w_max(), curves[1].w_max());

  std::vector<double> candidates = {0.0, w_common};
  for (const ConcaveCurve& curve : curves) {
    for (const Breakpoint& b : curve.breakpoints) {
      if (b.w <= w_common) candidates.push_back(b.w);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  // The mixed objective is concave: walk right while it does not decrease.
  const double p0 = pop.group_mass(Group::k0);
  const double p1 = pop.group_mass(Group::k1);
  double w_star = candidates.front();
  for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
    const double mid = candidates[i] + (candidates[i + 1] - candidates[i]) / 2;
    const double slope =
        p0 * SlopeAt(curves[0], mid) + p1 * SlopeAt(curves[1], mid);
    if (slope < -kSlopeTolerance) break;
    w_star = candidates[i + 1];
  }

  WeSolveResult result;
  result.algorithm = Algorithm::kCurve;
  result.w_star = w_star;
  result.classifier = Classifier::Zero(pop);
  std::vector<std::size_t> fractional;
  for (Group g : kGroups) {
    result.lambda[Index(g)] = FillGroup(pop, u, curves[Index(g)], w_star,
                                        result.classifier, fractional);
  }
  result.tie_cells =
      CollectTies(pop, u, result.classifier, result.lambda, fractional);
  FillSummary(pop, u, result);
  return result;
}

WeSolveResult SolveWeBisection(const Population& pop, const UtilityTable& u,
                               double tol) {
  RequireDomain(pop, u);
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  const double p0 = pop.group_mass(Group::k0);
  const double p1 = pop.group_mass(Group::k1);
  const std::size_t n = pop.size();
  std::vector<double> ubar(n);
  std::vector<double> weight(n);  // signed contribution to W(0) - W(1)
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ubar[i] = u.mean(pop, i);
    const double w = pop.conditional_mass(i) * ubar[i];
    weight[i] = pop.cell(i).a == Group::k0 ? w : -w;
    scale = std::max(scale, std::abs(w));
  }
  const double zero_gap = 1e-13 * std::max(1.0, scale);

  // Lagrangian maximizer for multiplier mu; lambda_0 = mu / P(A=0) and
  // lambda_1 = -mu / P(A=1). Knife-edge cells are rejected.
  auto approve = [&](double mu, std::vector<char>& c) {
    const std::array<double, 2> lambda = {mu / p0, -mu / p1};
    double gap = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = pop.margin(i) - lambda[Index(pop.cell(i).a)] * ubar[i] > 0.0;
      if (c[i]) gap += weight[i];
    }
    return gap;
  };

  std::vector<char> c_lo(n), c_hi(n), c_mid(n);
  WeSolveResult result;
  result.algorithm = Algorithm::kBisection;

  auto finalize = [&](double mu, const std::vector<char>& lo,
                      const std::vector<char>& hi) {
    std::vector<double> values(n);
    double base_gap = 0.0;
    std::array<double, 2> delta{};
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < n; ++i) {
      if (lo[i] != hi[i]) {
        ties.push_back(i);
        delta[Index(pop.cell(i).a)] += std::abs(weight[i]);
      } else if (lo[i]) {
        values[i] = 1.0;
        base_gap += weight[i];
      }
    }
    // Raise the lagging group's tie cells by a common fraction.
    std::array<double, 2> tau{};
    if (base_gap < 0.0 && delta[0] > 0.0) {
      tau[0] = std::clamp(-base_gap / delta[0], 0.0, 1.0);
    } else if (base_gap > 0.0 && delta[1] > 0.0) {
      tau[1] = std::clamp(base_gap / delta[1], 0.0, 1.0);
    }
    for (std::size_t i : ties) values[i] = tau[Index(pop.cell(i).a)];
    result.classifier = Classifier(pop.keys(), std::move(values));
    result.multiplier = mu;
    result.lambda = {mu / p0, -mu / p1};
    result.tie_cells = CollectTies(pop, u, result.classifier, result.lambda, ties);
    FillSummary(pop, u, result);
    result.w_star = (result.welfare[0] + result.welfare[1]) / 2;
    return result;
  };

  const double gap0 = approve(0.0, c_mid);
  if (std::abs(gap0) <= zero_gap) return finalize(0.0, c_mid, c_mid);

  // Bracket [lo, hi] with gap(lo) > 0 > gap(hi); the gap is nonincreasing.
  double lo = 0.0;
  double hi = 0.0;
  if (gap0 > 0.0) {
    c_lo = c_mid;
    double step = 1.0;
    for (int k = 0;; ++k) {
      if (k == kMaxBracketDoublings) {
        throw Error(ErrorCode::kBracketNotFound, "no sign change for mu > 0");
      }
      hi = step;
      const double g = approve(hi, c_hi);
      if (std::abs(g) <= zero_gap) return finalize(hi, c_hi, c_hi);
      if (g < 0.0) break;
      lo = hi;
      c_lo = c_hi;
      step *= 2;
    }
  } else {
    c_hi = c_mid;
    double step = 1.0;
    for (int k = 0;; ++k) {
      if (k == kMaxBracketDoublings) {
        throw Error(ErrorCode::kBracketNotFound, "no sign change for mu < 0");
      }
      lo = -step;
      const double g = approve(lo, c_lo);
      if (std::abs(g) <= zero_gap) return finalize(lo, c_lo, c_lo);
      if (g > 0.0) break;
      hi = lo;
      c_hi = c_lo;
      step *= 2;
    }
  }

  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const double g = approve(mid, c_mid);
    if (std::abs(g) <= zero_gap) return finalize(mid, c_mid, c_mid);
    if (g > 0.0) {
      lo = mid;
      c_lo = c_mid;
    } else {
      hi = mid;
      c_hi = c_mid;
    }
  }
  return finalize(lo + (hi - lo) / 2, c_lo, c_hi);
}

Classifier RescaleToExactEquality(const Classifier& c, const Population& pop,
                                  const UtilityTable& u) {
  const double w0 = GroupWelfare(pop, u, c, Group::k0);
  const double w1 = GroupWelfare(pop, u, c, Group::k1);
  if (w0 == w1 || (w0 <= 0.0 && w1 <= 0.0)) return c;
  const Group high = w0 < w1 ? Group::k1 : Group::k0;
  const double factor = std::min(w0, w1) / std::max(w0, w1);
  Classifier out = c;
  for (std::size_t i : pop.group_cells(high)) out.set(i, c[i] * factor);
  return out;
}

}  // namespace fairwe
