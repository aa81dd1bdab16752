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

#include "fairwe/population.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fairwe/error.h"

namespace fairwe {
namespace {

constexpr double kMassTolerance = 1e-12;

std::string Describe(const Cell& c) { return ToString(c.key()); }

}  // namespace

Group GroupFromInt(int value) {
  if (value != 0 && value != 1) {
    throw Error(ErrorCode::kInvalidGroup,
                "group must be 0 or 1, got " + std::to_string(value));
  }
  return static_cast<Group>(value);
}

std::string ToString(const CellKey& key) {
  return "(x=" + key.x + ", a=" + std::to_string(Index(key.a)) + ")";
}

double Threshold(double alpha_plus, double alpha_minus) {
  return alpha_minus / (alpha_plus + alpha_minus);
}

Population Population::Validate(std::vector<Cell> cells) {
  if (cells.empty()) {
    throw Error(ErrorCode::kEmptyInput, "population has no cells");
  }
  for (const Cell& c : cells) {
    if (c.x.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty x label");
    }
    if (!(c.mass >= 0.0) || !std::isfinite(c.mass)) {
      throw Error(ErrorCode::kNegativeMass, Describe(c));
    }
    if (!(c.p >= 0.0 && c.p <= 1.0)) {
      throw Error(ErrorCode::kProbabilityOutOfRange, Describe(c));
    }
    if (!(c.alpha_plus > 0.0) || !(c.alpha_minus > 0.0) ||
        !std::isfinite(c.alpha_plus) || !std::isfinite(c.alpha_minus)) {
      throw Error(ErrorCode::kNonPositiveAlpha, Describe(c));
    }
  }

  std::sort(cells.begin(), cells.end(),
            [](const Cell& l, const Cell& r) { return l.key() < r.key(); });
  for (std::size_t i = 1; i < cells.size(); ++i) {
    if (cells[i - 1].key() == cells[i].key()) {
      throw Error(ErrorCode::kDuplicateCell, Describe(cells[i]));
    }
  }

  // alpha_+ and alpha_- are functions of x alone.
  std::map<std::string, AlphaPair, std::less<>> alpha_by_x;
  for (const Cell& c : cells) {
    auto [it, inserted] =
        alpha_by_x.try_emplace(c.x, AlphaPair{c.alpha_plus, c.alpha_minus});
    if (!inserted && (it->second.alpha_plus != c.alpha_plus ||
                      it->second.alpha_minus != c.alpha_minus)) {
      throw Error(ErrorCode::kInconsistentAlphaAcrossGroups, "x=" + c.x);
    }
  }

  const double total = std::accumulate(
      cells.begin(), cells.end(), 0.0,
      [](double acc, const Cell& c) { return acc + c.mass; });
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw Error(ErrorCode::kMassNotNormalized,
                "masses sum to " + std::to_string(total));
  }
  for (Cell& c : cells) c.mass /= total;

  Population pop;
  pop.cells_ = std::move(cells);
  pop.threshold_.reserve(pop.cells_.size());
  pop.margin_.reserve(pop.cells_.size());
  for (std::size_t i = 0; i < pop.cells_.size(); ++i) {
    const Cell& c = pop.cells_[i];
    const double t = Threshold(c.alpha_plus, c.alpha_minus);
    if (!(t > 0.0 && t < 1.0)) {
      throw Error(ErrorCode::kNonPositiveAlpha,
                  "threshold outside (0, 1) at " + Describe(c));
    }
    pop.threshold_.push_back(t);
    pop.margin_.push_back((c.alpha_plus + c.alpha_minus) * (c.p - t));
    pop.group_mass_[Index(c.a)] += c.mass;
    pop.group_cells_[Index(c.a)].push_back(i);
  }
  for (Group g : kGroups) {
    if (!(pop.group_mass_[Index(g)] > 0.0)) {
      throw Error(ErrorCode::kEmptyGroup,
                  "group " + std::to_string(Index(g)) + " has no mass");
    }
  }
  return pop;
}

double Population::good_rate(Group g) const {
  double rate = 0.0;
  for (std::size_t i : group_cells(g)) rate += conditional_mass(i) * cells_[i].p;
  return rate;
}

std::optional<std::size_t> Population::Find(const CellKey& key) const {
  auto it = std::lower_bound(
      cells_.begin(), cells_.end(), key,
      [](const Cell& c, const CellKey& k) { return c.key() < k; });
  if (it == cells_.end() || it->key() != key) return std::nullopt;
  return static_cast<std::size_t>(it - cells_.begin());
}

std::vector<CellKey> Population::keys() const {
  std::vector<CellKey> out;
  out.reserve(cells_.size());
  for (const Cell& c : cells_) out.push_back(c.key());
  return out;
}

Population FromSamples(std::span<const SampleRow> rows,
                       const AlphaTable& alphas) {
  struct Accumulator {
    double weight = 0.0;
    double good = 0.0;
  };
  std::map<CellKey, Accumulator> cells;
  double total = 0.0;
  for (const SampleRow& row : rows) {
    if (!(row.weight >= 0.0) || !std::isfinite(row.weight)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative sample weight for x=" + row.x);
    }
    if (row.y != 0 && row.y != 1) {
      throw Error(ErrorCode::kInvalidArgument, "outcome y must be 0 or 1");
    }
    if (!alphas.contains(row.x)) {
      throw Error(ErrorCode::kMissingAlphaEntry, "x=" + row.x);
    }
    Accumulator& acc = cells[CellKey{row.x, row.a}];
    acc.weight += row.weight;
    if (row.y == 1) acc.good += row.weight;
    total += row.weight;
  }
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kEmptyInput, "total sample weight is zero");
  }

  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const auto& [key, acc] : cells) {
    const AlphaPair& alpha = alphas.find(key.x)->second;
    out.push_back(Cell{
        .x = key.x,
        .a = key.a,
        .mass = acc.weight / total,
        .p = acc.weight > 0.0 ? acc.good / acc.weight : 0.0,
        .alpha_plus = alpha.alpha_plus,
        .alpha_minus = alpha.alpha_minus,
    });
  }
  return Population::Validate(std::move(out));
}

namespace {

// Weighted quantile cut points q_1 < ... for k right-closed bins: q_j is the
// smallest value whose cumulative weight reaches j/k of the total.
std::vector<double> QuantileCuts(std::vector<std::pair<double, double>> values,
                                 int bins) {
  std::sort(values.begin(), values.end());
  double total = 0.0;
  for (const auto& [v, w] : values) total += w;
  std::vector<double> cuts;
  cuts.reserve(bins - 1);
  double cumulative = 0.0;
  std::size_t pos = 0;
  for (int j = 1; j < bins; ++j) {
    const double target = total * j / bins;
    while (pos < values.size() &&
           cumulative + values[pos].second < target * (1 - 1e-12)) {
      cumulative += values[pos].second;
      ++pos;
    }
    cuts.push_back(pos < values.size() ? values[pos].first
                                       : values.back().first);
  }
  return cuts;
}

}  // namespace

std::vector<SampleRow> BinNumeric(std::span<const NumericRow> rows,
                                  BinScheme scheme,
                                  std::span<const int> bins_per_feature) {
  if (rows.empty()) throw Error(ErrorCode::kEmptyInput, "no numeric rows");
  const std::size_t dims = rows.front().features.size();
  if (dims == 0) throw Error(ErrorCode::kEmptyInput, "rows have no features");
  for (const NumericRow& row : rows) {
    if (row.features.size() != dims) {
      throw Error(ErrorCode::kInvalidArgument, "ragged feature vectors");
    }
  }
  if (bins_per_feature.size() != dims && bins_per_feature.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "bins_per_feature must have 1 or " + std::to_string(dims) +
                    " entries");
  }
  auto bins_for = [&](std::size_t d) {
    return bins_per_feature.size() == 1 ? bins_per_feature[0]
                                        : bins_per_feature[d];
  };
  for (std::size_t d = 0; d < dims; ++d) {
    if (bins_for(d) <= 0) {
      throw Error(ErrorCode::kZeroBins, "feature " + std::to_string(d));
    }
  }

  std::vector<std::vector<int>> index(rows.size(), std::vector<int>(dims, 0));
  for (std::size_t d = 0; d < dims; ++d) {
    const int bins = bins_for(d);
    double lo = rows.front().features[d];
    double hi = lo;
    for (const NumericRow& row : rows) {
      lo = std::min(lo, row.features[d]);
      hi = std::max(hi, row.features[d]);
    }
    if (scheme == BinScheme::kEqualWidth) {
      if (hi == lo) continue;  // everything in bin 0
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const double rel = (rows[i].features[d] - lo) / (hi - lo);
        index[i][d] = std::min(bins - 1, static_cast<int>(rel * bins));
      }
    } else {
      if (hi == lo) {
        throw Error(ErrorCode::kConstantFeatureWithQuantiles,
                    "feature " + std::to_string(d) + " is constant");
      }
      std::vector<std::pair<double, double>> values;
      values.reserve(rows.size());
      for (const NumericRow& row : rows) {
        values.emplace_back(row.features[d], row.weight);
      }
      const std::vector<double> cuts = QuantileCuts(std::move(values), bins);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        // Number of cut points strictly below the value.
        index[i][d] = static_cast<int>(
            std::lower_bound(cuts.begin(), cuts.end(), rows[i].features[d]) -
            cuts.begin());
      }
    }
  }

  std::vector<SampleRow> out;
  out.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string label = "b";
    for (std::size_t d = 0; d < dims; ++d) {
      if (d > 0) label += '_';
      label += std::to_string(index[i][d]);
    }
    out.push_back(
        SampleRow{std::move(label), rows[i].a, rows[i].y, rows[i].weight});
  }
  return out;
}

}  // namespace fairwe
