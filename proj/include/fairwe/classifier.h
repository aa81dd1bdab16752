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

#ifndef FAIRWE_CLASSIFIER_H_
#define FAIRWE_CLASSIFIER_H_

#include <cstddef>
#include <span>
#include <vector>

#include "fairwe/population.h"

namespace fairwe {

// Per-cell loan probability c(x, a) in [0, 1], aligned with the cell order of
// the population it was built for.
class Classifier {
 public:
  Classifier() = default;
  // Throws kInvalidClassifierValue for values outside [0, 1] and
  // kInvalidArgument when keys and values differ in length.
  Classifier(std::vector<CellKey> keys, std::vector<double> values);

  static Classifier Constant(const Population& pop, double value);
  static Classifier Zero(const Population& pop) { return Constant(pop, 0.0); }

  std::size_t size() const { return values_.size(); }
  const std::vector<CellKey>& keys() const { return keys_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  void set(std::size_t i, double value);

  // True when the classifier is defined on exactly the population's cells.
  bool Matches(const Population& pop) const;

 private:
  std::vector<CellKey> keys_;
  std::vector<double> values_;
};

// Throws kDomainMismatch unless c.Matches(pop).
void RequireDomain(const Population& pop, const Classifier& c);

}  // namespace fairwe

#endif  // FAIRWE_CLASSIFIER_H_
