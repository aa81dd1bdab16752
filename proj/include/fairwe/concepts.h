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

#ifndef FAIRWE_CONCEPTS_H_
#define FAIRWE_CONCEPTS_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fairwe/classifier.h"
#include "fairwe/population.h"

namespace fairwe {

// Borrower utility u(x, a, y) for receiving a loan; the utility of being
// rejected is normalized to zero. Entries are nonnegative and aligned with
// the population cell order.
class UtilityTable {
 public:
  UtilityTable() = default;
  // Throws kNegativeUtility on any negative (or NaN) entry.
  UtilityTable(std::vector<CellKey> keys, std::vector<double> good,
               std::vector<double> bad);

  // Constant table u(., ., 1) = good, u(., ., 0) = bad.
  static UtilityTable Constant(const Population& pop, double good, double bad);

  std::size_t size() const { return keys_.size(); }
  const std::vector<CellKey>& keys() const { return keys_; }
  double value(std::size_t i, int y) const { return y ? good_[i] : bad_[i]; }

  // ubar(x, a) = u(x, a, 1) p + u(x, a, 0) (1 - p).
  double mean(const Population& pop, std::size_t i) const {
    const double p = pop.cell(i).p;
    return good_[i] * p + bad_[i] * (1.0 - p);
  }
  // E[u | A = a], the largest attainable welfare of group a.
  double group_mean(const Population& pop, Group g) const;

  bool Matches(const Population& pop) const;

 private:
  std::vector<CellKey> keys_;
  std::vector<double> good_;
  std::vector<double> bad_;
};

// Throws kUtilityDomainMismatch unless u.Matches(pop).
void RequireDomain(const Population& pop, const UtilityTable& u);

// Unnormalized utilities: u_plus on approval, u_minus on rejection, both
// possibly negative.
struct RawUtility {
  std::vector<CellKey> keys;
  std::vector<double> plus_good, plus_bad;
  std::vector<double> minus_good, minus_bad;
};

struct DemographicParity {};

struct EqualOpportunity {
  // Divide by P(Y = 1 | A = a) so that group welfare equals the true
  // positive rate. The unnormalized form is u = 1{y = 1}.
  bool normalized = true;
};

// u(., ., 1) = alpha, u(., ., 0) = beta with alpha >= beta >= 0.
struct EqualizedOddsMember {
  double alpha = 1.0;
  double beta = 0.0;
};

// u(x, ., 1) = m(x), normalized per group like EqualOpportunity.
struct HeterogeneousEo {
  std::map<std::string, double, std::less<>> amount;
  bool normalized = true;
};

struct CustomEntry {
  CellKey key;
  int y = 0;
  double value = 0.0;
};

struct CustomUtility {
  std::vector<CustomEntry> entries;
};

using ConceptSpec = std::variant<DemographicParity, EqualOpportunity,
                                 EqualizedOddsMember, HeterogeneousEo,
                                 CustomUtility>;

std::string ConceptName(const ConceptSpec& spec);

// Builds the utility table realizing a fairness concept on pop.
UtilityTable MakeUtility(const ConceptSpec& spec, const Population& pop);

// Replaces (u_+, u_-) by (u_+ - u_-, 0). Requires the zero classifier to be
// welfare-equalizing for the raw utility (kZeroClassifierNotWE otherwise);
// the resulting table defines the same set of welfare-equalizing classifiers.
UtilityTable ShiftToZeroMinus(const RawUtility& raw, const Population& pop);

// E[u_+ c + u_- (1 - c) | A = a].
double RawGroupWelfare(const Population& pop, const RawUtility& raw,
                       const Classifier& c, Group g);

// E[c | Y = y, A = a]; nullopt when P(Y = y, A = a) = 0.
std::optional<double> ConditionalRate(const Population& pop,
                                      const Classifier& c, Group g, int y);

struct EoFamilyCheck {
  bool member = false;
  double tpr_gap = 0.0;  // |E[c|Y=1,A=0] - E[c|Y=1,A=1]|
  double fpr_gap = 0.0;  // |E[c|Y=0,A=0] - E[c|Y=0,A=1]|
};

// A classifier is welfare-equalizing for every u = (alpha, beta),
// alpha >= beta >= 0, iff both per-outcome approval rates agree across
// groups (within 1e-9). Throws kUndefinedConditional if some P(Y=y|A=a) = 0.
EoFamilyCheck IsWeForEoFamily(const Classifier& c, const Population& pop);

}  // namespace fairwe

#endif  // FAIRWE_CONCEPTS_H_
