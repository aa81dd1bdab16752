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

#ifndef FAIRWE_POPULATION_H_
#define FAIRWE_POPULATION_H_

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fairwe {

// Binary protected attribute.
enum class Group : int { k0 = 0, k1 = 1 };

inline constexpr std::array<Group, 2> kGroups = {Group::k0, Group::k1};

constexpr int Index(Group g) { return static_cast<int>(g); }
constexpr Group Other(Group g) { return g == Group::k0 ? Group::k1 : Group::k0; }

// Throws kInvalidGroup unless value is 0 or 1.
Group GroupFromInt(int value);

// A population cell (x, a). Ordered by group first, then by x label.
struct CellKey {
  std::string x;
  Group a = Group::k0;

  friend bool operator==(const CellKey&, const CellKey&) = default;
  friend std::strong_ordering operator<=>(const CellKey& l, const CellKey& r) {
    if (auto c = Index(l.a) <=> Index(r.a); c != 0) return c;
    return l.x.compare(r.x) <=> 0;
  }
};

std::string ToString(const CellKey& key);

struct Cell {
  std::string x;
  Group a = Group::k0;
  double mass = 0.0;         // P(X = x, A = a)
  double p = 0.0;            // P(Y = 1 | X = x, A = a)
  double alpha_plus = 1.0;   // revenue from a repaid loan
  double alpha_minus = 1.0;  // loss from a defaulted loan

  CellKey key() const { return {x, a}; }
};

// Break-even repayment probability alpha_- / (alpha_+ + alpha_-).
double Threshold(double alpha_plus, double alpha_minus);

// A validated, immutable finite joint distribution over (x, a) cells.
//
// Cells are stored in CellKey order; every per-cell vector elsewhere in the
// library (classifiers, utility tables) is aligned with that order.
class Population {
 public:
  // Verifies every invariant and precomputes thresholds, margins and group
  // masses. Masses within 1e-12 of summing to one are renormalized; anything
  // further off is rejected.
  static Population Validate(std::vector<Cell> cells);

  std::size_t size() const { return cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(std::size_t i) const { return cells_[i]; }
  CellKey key(std::size_t i) const { return cells_[i].key(); }

  // t(x) and r(x, a) = (alpha_+ + alpha_-)(p - t).
  double threshold(std::size_t i) const { return threshold_[i]; }
  double margin(std::size_t i) const { return margin_[i]; }

  double group_mass(Group g) const { return group_mass_[Index(g)]; }
  // P(X = x | A = a) for the cell's own group.
  double conditional_mass(std::size_t i) const {
    return cells_[i].mass / group_mass_[Index(cells_[i].a)];
  }
  // P(Y = 1 | A = a).
  double good_rate(Group g) const;

  // Indices of the cells of group g, in x-label order.
  std::span<const std::size_t> group_cells(Group g) const {
    return group_cells_[Index(g)];
  }

  std::optional<std::size_t> Find(const CellKey& key) const;

  std::vector<CellKey> keys() const;

 private:
  Population() = default;

  std::vector<Cell> cells_;
  std::vector<double> threshold_;
  std::vector<double> margin_;
  std::array<double, 2> group_mass_{};
  std::array<std::vector<std::size_t>, 2> group_cells_;
};

struct SampleRow {
  std::string x;
  Group a = Group::k0;
  int y = 0;
  double weight = 1.0;
};

struct AlphaPair {
  double alpha_plus = 1.0;
  double alpha_minus = 1.0;
};

using AlphaTable = std::map<std::string, AlphaPair, std::less<>>;

// Empirical population: mass(x, a) is the weight share of the cell and
// p(x, a) the weighted fraction of repaid rows within it. A cell whose rows
// all carry zero weight is kept with mass 0 and p = 0.
Population FromSamples(std::span<const SampleRow> rows, const AlphaTable& alphas);

enum class BinScheme { kEqualWidth, kQuantile };

struct NumericRow {
  std::vector<double> features;
  Group a = Group::k0;
  int y = 0;
  double weight = 1.0;
};

// Maps numeric feature vectors to composite bin labels "b<i0>_<i1>_...".
//
// Equal-width bins split [min, max] evenly with the maximum falling in the
// last bin. Quantile bins use weighted quantiles with right-closed
// intervals (q_{j-1}, q_j]. bins_per_feature must either have one entry per
// feature or a single entry that applies to every feature.
std::vector<SampleRow> BinNumeric(std::span<const NumericRow> rows,
                                  BinScheme scheme,
                                  std::span<const int> bins_per_feature);

}  // namespace fairwe

#endif  // FAIRWE_POPULATION_H_
