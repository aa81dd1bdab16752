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

#include "fairwe/io.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fairwe/error.h"

namespace fairwe {
namespace {

template <class T>
T Field(const Json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw Error(ErrorCode::kParseError,
                std::string("missing field \"") + name + "\"");
  }
  try {
    return obj.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("field \"") + name + "\": " + e.what());
  }
}

Json KeyJson(const CellKey& key) {
  return Json{{"x", key.x}, {"a", Index(key.a)}};
}

Json Pair(const std::array<double, 2>& v) { return Json::array({v[0], v[1]}); }

Json Optional(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(Trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double ParseDouble(const std::string& text, std::size_t line) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line) +
                                            ": not a number: \"" + text + "\"");
  }
  return value;
}

int ParseInt(const std::string& text, std::size_t line) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line) +
                                            ": not an integer: \"" + text +
                                            "\"");
  }
  return value;
}

}  // namespace

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorCode::kIoError, "short write to " + path.string());
}

Population PopulationFromJson(const Json& json) {
  const Json cells = Field<Json>(json, "cells");
  if (!cells.is_array()) {
    throw Error(ErrorCode::kParseError, "\"cells\" must be an array");
  }
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const Json& c : cells) {
    out.push_back(Cell{
        .x = Field<std::string>(c, "x"),
        .a = GroupFromInt(Field<int>(c, "a")),
        .mass = Field<double>(c, "mass"),
        .p = Field<double>(c, "p"),
        .alpha_plus = Field<double>(c, "alpha_plus"),
        .alpha_minus = Field<double>(c, "alpha_minus"),
    });
  }
  return Population::Validate(std::move(out));
}

Json ToJson(const Population& pop) {
  Json cells = Json::array();
  for (const Cell& c : pop.cells()) {
    cells.push_back(Json{{"x", c.x},
                         {"a", Index(c.a)},
                         {"mass", c.mass},
                         {"p", c.p},
                         {"alpha_plus", c.alpha_plus},
                         {"alpha_minus", c.alpha_minus}});
  }
  return Json{{"cells", std::move(cells)}};
}

ConceptSpec ConceptFromJson(const Json& json, bool eo_unnormalized) {
  const auto kind = Field<std::string>(json, "kind");
  const bool normalized =
      !eo_unnormalized &&
      (!json.contains("normalized") || Field<bool>(json, "normalized"));
  if (kind == "demographic_parity") return DemographicParity{};
  if (kind == "equal_opportunity") return EqualOpportunity{normalized};
  if (kind == "equalized_odds_member") {
    return EqualizedOddsMember{Field<double>(json, "alpha"),
                               Field<double>(json, "beta")};
  }
  if (kind == "heterogeneous_eo") {
    HeterogeneousEo het;
    het.normalized = normalized;
    const Json m = Field<Json>(json, "m");
    if (!m.is_object()) {
      throw Error(ErrorCode::kParseError, "\"m\" must be an object");
    }
    for (const auto& [label, amount] : m.items()) {
      het.amount[label] = Field<double>(Json{{"m", amount}}, "m");
    }
    return het;
  }
  if (kind == "custom") {
    CustomUtility custom;
    const Json entries = Field<Json>(json, "u");
    if (!entries.is_array()) {
      throw Error(ErrorCode::kParseError, "\"u\" must be an array");
    }
    for (const Json& e : entries) {
      custom.entries.push_back(CustomEntry{
          CellKey{Field<std::string>(e, "x"), GroupFromInt(Field<int>(e, "a"))},
          Field<int>(e, "y"), Field<double>(e, "value")});
    }
    return custom;
  }
  throw Error(ErrorCode::kInvalidConcept, "unknown concept kind \"" + kind + "\"");
}

Json ToJson(const ConceptSpec& spec) {
  if (std::holds_alternative<DemographicParity>(spec)) {
    return Json{{"kind", "demographic_parity"}};
  }
  if (const auto* eo = std::get_if<EqualOpportunity>(&spec)) {
    return Json{{"kind", "equal_opportunity"}, {"normalized", eo->normalized}};
  }
  if (const auto* eo = std::get_if<EqualizedOddsMember>(&spec)) {
    return Json{{"kind", "equalized_odds_member"},
                {"alpha", eo->alpha},
                {"beta", eo->beta}};
  }
  if (const auto* het = std::get_if<HeterogeneousEo>(&spec)) {
    Json m = Json::object();
    for (const auto& [label, amount] : het->amount) m[label] = amount;
    return Json{{"kind", "heterogeneous_eo"},
                {"m", std::move(m)},
                {"normalized", het->normalized}};
  }
  Json entries = Json::array();
  for (const CustomEntry& e : std::get<CustomUtility>(spec).entries) {
    entries.push_back(Json{{"x", e.key.x},
                           {"a", Index(e.key.a)},
                           {"y", e.y},
                           {"value", e.value}});
  }
  return Json{{"kind", "custom"}, {"u", std::move(entries)}};
}

std::vector<SampleRow> ParseSamplesCsv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<SampleRow> rows;
  // Skip leading blank lines; an input without a header has no rows.
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!Trim(line).empty()) {
      header = SplitCsvLine(line);
      break;
    }
  }
  if (header.empty()) return rows;
  if (!header.empty() && header[0].starts_with("\xEF\xBB\xBF")) {
    header[0] = header[0].substr(3);
  }
  auto column = [&](std::string_view name) -> int {
    auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<int>(it - header.begin());
  };
  const int cx = column("x");
  const int ca = column("a");
  const int cy = column("y");
  const int cw = column("weight");
  if (cx < 0 || ca < 0 || cy < 0) {
    throw Error(ErrorCode::kParseError, "header must contain x,a,y[,weight]");
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::vector<std::string> fields = SplitCsvLine(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(header.size()) + " fields");
    }
    SampleRow row;
    row.x = fields[cx];
    if (row.x.empty()) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": empty x label");
    }
    row.a = GroupFromInt(ParseInt(fields[ca], line_no));
    row.y = ParseInt(fields[cy], line_no);
    if (cw >= 0 && !fields[cw].empty()) {
      row.weight = ParseDouble(fields[cw], line_no);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

AlphaTable AlphaTableFromJson(const Json& json) {
  if (!json.is_object()) {
    throw Error(ErrorCode::kParseError, "alpha table must be an object");
  }
  AlphaTable table;
  for (const auto& [label, entry] : json.items()) {
    table[label] = AlphaPair{Field<double>(entry, "alpha_plus"),
                             Field<double>(entry, "alpha_minus")};
  }
  return table;
}

std::string FormatNumber(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void WriteClassifierCsv(std::ostream& out, const Classifier& c) {
  out << "x,a,c\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << c.keys()[i].x << ',' << Index(c.keys()[i].a) << ','
        << FormatNumber(c[i]) << '\n';
  }
}

void WriteCurveCsv(std::ostream& out, const ConcaveCurve& curve) {
  out << "w,R\n";
  for (const Breakpoint& b : curve.breakpoints) {
    out << FormatNumber(b.w) << ',' << FormatNumber(b.revenue) << '\n';
  }
}

void WriteObjectiveCsv(std::ostream& out, const Population& pop,
                       const ConcaveCurve& c0, const ConcaveCurve& c1) {
  const double w_common = std::min(c0.w_max(), c1.w_max());
  std::vector<double> ws = {0.0, w_common};
  for (const ConcaveCurve* curve : {&c0, &c1}) {
    for (const Breakpoint& b : curve->breakpoints) {
      if (b.w <= w_common) ws.push_back(b.w);
    }
  }
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  out << "w,F\n";
  for (double w : ws) {
    const double f = pop.group_mass(Group::k0) * c0.Evaluate(w) +
                     pop.group_mass(Group::k1) * c1.Evaluate(w);
    out << FormatNumber(w) << ',' << FormatNumber(f) << '\n';
  }
}

Json ToJson(const Classifier& c) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Json row = KeyJson(c.keys()[i]);
    row["c"] = c[i];
    rows.push_back(std::move(row));
  }
  return rows;
}

Json ToJson(const WeSolveResult& result) {
  Json ties = Json::array();
  for (const TieCell& t : result.tie_cells) {
    Json row = KeyJson(t.key);
    row["c"] = t.value;
    ties.push_back(std::move(row));
  }
  Json out{{"revenue", result.revenue},
           {"w_star", result.w_star},
           {"welfare", Pair(result.welfare)},
           {"lambda", Pair(result.lambda)},
           {"classifier", ToJson(result.classifier)},
           {"tie_cells", std::move(ties)},
           {"algorithm", std::string(AlgorithmName(result.algorithm))}};
  if (result.algorithm == Algorithm::kBisection) {
    out["multiplier"] = result.multiplier;
  }
  return out;
}

Json ToJson(const AuditReport& report) {
  Json out{{"revenue", report.revenue},
           {"group_welfare", Pair(report.group_welfare)},
           {"we_gap", report.we_gap},
           {"dp_gap", report.dp_gap}};
  // Undefined conditional gaps are omitted.
  if (report.eo_gap) out["eo_gap"] = *report.eo_gap;
  if (report.fp_gap) out["fp_gap"] = *report.fp_gap;
  out["approval_rate"] = Pair(report.approval_rate);
  out["good_approval_rate"] = Json::array(
      {Optional(report.good_approval_rate[0]),
       Optional(report.good_approval_rate[1])});
  return out;
}

Json ToJson(const TheoremCheck& check) {
  Json violating = Json::array();
  for (const CellKey& key : check.violating_cells) {
    violating.push_back(KeyJson(key));
  }
  return Json{{"disadvantaged", check.disadvantaged
                                    ? Json(Index(*check.disadvantaged))
                                    : Json(nullptr)},
              {"welfare_before", Pair(check.welfare_before)},
              {"welfare_after", Pair(check.welfare_after)},
              {"welfare_ok", check.welfare_ok},
              {"pointwise_ok", check.pointwise_ok},
              {"violating_cells", std::move(violating)}};
}

Json ToJson(const RobustnessReport& report) {
  return Json{{"applicable", report.applicable},
              {"disadvantaged", report.disadvantaged
                                    ? Json(Index(*report.disadvantaged))
                                    : Json(nullptr)},
              {"welfare_before", report.welfare_before},
              {"welfare_after", report.welfare_after},
              {"holds", report.holds},
              {"note", report.note}};
}

Json ToJson(const PriceOfFairness& report) {
  auto outcome = [](const PolicyOutcome& o) {
    return Json{{"revenue", o.revenue},
                {"welfare", Pair(o.welfare)},
                {"revenue_drop", o.revenue_drop},
                {"welfare_delta", Pair(o.welfare_delta)}};
  };
  return Json{{"unconstrained", outcome(report.unconstrained)},
              {"welfare_equalizing", outcome(report.welfare_equalizing)},
              {"unaware", outcome(report.unaware)}};
}

}  // namespace fairwe
