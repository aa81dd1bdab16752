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

#include "fairwe/classifier.h"

#include <string>

#include "fairwe/error.h"

namespace fairwe {
namespace {

void CheckValue(double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::kInvalidClassifierValue,
                "loan probability " + std::to_string(value));
  }
}

}  // namespace

Classifier::Classifier(std::vector<CellKey> keys, std::vector<double> values)
    : keys_(std::move(keys)), values_(std::move(values)) {
  if (keys_.size() != values_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "keys and values differ in size");
  }
  for (double v : values_) CheckValue(v);
}

Classifier Classifier::Constant(const Population& pop, double value) {
  return Classifier(pop.keys(), std::vector<double>(pop.size(), value));
}

void Classifier::set(std::size_t i, double value) {
  CheckValue(value);
  values_.at(i) = value;
}

bool Classifier::Matches(const Population& pop) const {
  if (keys_.size() != pop.size()) return false;
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i] != pop.key(i)) return false;
  }
  return true;
}

void RequireDomain(const Population& pop, const Classifier& c) {
  if (!c.Matches(pop)) {
    throw Error(ErrorCode::kDomainMismatch,
                "classifier cells do not match the population");
  }
}

}  // namespace fairwe
