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

#include "fairwe/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fairwe/error.h"

namespace fairwe {
namespace {

constexpr std::size_t kMaxOracleCells = 8;
constexpr double kDomainTolerance = 1e-12;

void CheckSize(std::size_t cells, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "grid resolution < 1");
  if (cells > kMaxOracleCells ||
      std::pow(static_cast<double>(k) + 1, static_cast<double>(cells)) >
          kMaxOracleEnumeration) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(cells) + " cells at resolution " +
                    std::to_string(k));
  }
}

// Depth-first enumeration of grid values with revenue and welfare pruning.
// Each cell contributes revenue `gain * v / k` and welfare offset
// `shift * v / k`; a leaf is feasible when the total offset lies within
// [target - slack, target + slack].
class GridSearch {
 public:
  GridSearch(std::vector<double> gain, std::vector<double> shift, int k,
             double target, double slack)
      : gain_(std::move(gain)),
        shift_(std::move(shift)),
        k_(k),
        target_(target),
        slack_(slack),
        n_(gain_.size()),
        current_(n_, 0),
        best_(n_, 0) {
    best_gain_ = std::vector<double>(n_ + 1, 0.0);
    up_ = std::vector<double>(n_ + 1, 0.0);
    down_ = std::vector<double>(n_ + 1, 0.0);
    for (std::size_t i = n_; i-- > 0;) {
      best_gain_[i] = best_gain_[i + 1] + std::max(0.0, gain_[i]);
      up_[i] = up_[i + 1] + std::max(0.0, shift_[i]);
      down_[i] = down_[i + 1] + std::min(0.0, shift_[i]);
    }
  }

  // Returns false when no leaf is feasible.
  bool Run() {
    Visit(0, 0.0, 0.0);
    return found_;
  }

  double best_value() const { return best_value_; }
  const std::vector<int>& best() const { return best_; }

 private:
  void Visit(std::size_t i, double value, double offset) {
    if (found_ && value + best_gain_[i] <= best_value_) return;
    if (offset + up_[i] < target_ - slack_) return;
    if (offset + down_[i] > target_ + slack_) return;
    if (i == n_) {
      if (std::abs(offset - target_) <= slack_ &&
          (!found_ || value > best_value_)) {
        found_ = true;
        best_value_ = value;
        best_ = current_;
      }
      return;
    }
    for (int v = 0; v <= k_; ++v) {
      current_[i] = v;
      const double frac = static_cast<double>(v) / k_;
      Visit(i + 1, value + gain_[i] * frac, offset + shift_[i] * frac);
    }
    current_[i] = 0;
  }

  std::vector<double> gain_;
  std::vector<double> shift_;
  int k_;
  double target_;
  double slack_;
  std::size_t n_;
  std::vector<double> best_gain_;
  std::vector<double> up_;
  std::vector<double> down_;
  std::vector<int> current_;
  std::vector<int> best_;
  bool found_ = false;
  double best_value_ = -std::numeric_limits<double>::infinity();
};

}  // namespace

double RevenueLipschitz(const Population& pop) {
  double total = 0.0;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    total += pop.cell(i).mass * std::abs(pop.margin(i));
  }
  return total;
}

OracleSolution BruteForceWe(const Population& pop, const UtilityTable& u,
                            const GridSpec& grid) {
  RequireDomain(pop, u);
  const int k = grid.resolution;
  CheckSize(pop.size(), k);
  std::vector<double> gain(pop.size());
  std::vector<double> shift(pop.size());
  double max_weight = 0.0;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const double w = pop.conditional_mass(i) * u.mean(pop, i);
    gain[i] = pop.cell(i).mass * pop.margin(i);
    shift[i] = pop.cell(i).a == Group::k0 ? w : -w;
    max_weight = std::max(max_weight, w);
  }
  const double slack = grid.welfare_slack.value_or(max_weight / k);
  if (!(slack >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "negative welfare slack");
  }
  GridSearch search(std::move(gain), std::move(shift), k, 0.0, slack);
  search.Run();  // the zero classifier is always feasible

  std::vector<double> values(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) {
    values[i] = static_cast<double>(search.best()[i]) / k;
  }
  OracleSolution out{Classifier(pop.keys(), std::move(values)), 0.0};
  // Recompute in cell order so the value does not depend on search order.
  for (std::size_t i = 0; i < pop.size(); ++i) {
    out.revenue += pop.cell(i).mass * pop.margin(i) * out.classifier[i];
  }
  return out;
}

double BruteForceCurvePoint(const Population& pop, const UtilityTable& u,
                            Group g, double w, const GridSpec& grid) {
  RequireDomain(pop, u);
  const int k = grid.resolution;
  const auto cells = pop.group_cells(g);
  CheckSize(cells.size(), k);
  const double w_max = u.group_mean(pop, g);
  if (!(w >= -kDomainTolerance && w <= w_max + kDomainTolerance)) {
    throw Error(ErrorCode::kWOutOfDomain,
                "w=" + std::to_string(w) + " outside [0, " +
                    std::to_string(w_max) + "]");
  }
  std::vector<double> gain;
  std::vector<double> shift;
  double max_weight = 0.0;
  for (std::size_t i : cells) {
    const double q = pop.conditional_mass(i);
    gain.push_back(q * pop.margin(i));
    shift.push_back(q * u.mean(pop, i));
    max_weight = std::max(max_weight, shift.back());
  }
  const double slack = grid.welfare_slack.value_or(max_weight / k);
  GridSearch search(std::move(gain), std::move(shift), k, w, slack);
  if (!search.Run()) return -std::numeric_limits<double>::infinity();
  return search.best_value();
}

}  // namespace fairwe
